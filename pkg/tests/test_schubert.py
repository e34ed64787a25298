import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hessex.hessenberg import HessenbergFunction as HF
from hessex.hessenberg import ja_ideal, k_ideal
from hessex.idealops import CERTIFIED_RADICAL, ideals_equal, multidegree, radical_certificate
from hessex.polycore import DiagonalTwist, Ring
from hessex.schubert import (
    Permutation,
    bruhat_leq,
    class_formula,
    rank_fn,
    schubert_determinantal_ideal,
    schubert_polynomial,
    u_of,
    v_of,
    w0_act,
    w_of,
)
from hessex.xpoly import XPoly

from oracle import subword_bruhat_leq

P = Permutation.parse
S4 = Permutation.all(4)
NAMED_S4 = ["[2134]", "[1423]", "[2143]", "[2314]", "[3142]", "[4132]", "[3421]", "[3214]"]


def x(i, n=3):
    return XPoly.var(n, i)


# -- permutations


def test_parse_forms():
    assert P("[2,1,3,4,5]") == P("21345") == P("[21345]") == P("2 1 3 4 5")
    with pytest.raises(ValueError):
        P("[1,1,2]")
    with pytest.raises(ValueError):
        P("abc")


def test_composition_and_inverse():
    w = P("[3142]")
    assert (w * w.inverse()) == Permutation.identity(4)
    assert (P("[2134]") * P("[1324]")) == P("[2314]")


def test_length_matches_inversions():
    assert P("[4132]").length() == 4
    assert Permutation.longest(4).length() == 6
    assert Permutation.identity(4).length() == 0


def test_matrix_convention():
    M = P("[21345]").matrix()
    assert M[1][0] == 1 and M[0][1] == 1
    w = P("[12534]")
    M = w.matrix()
    assert all(M[w(j) - 1][j - 1] == 1 for j in range(1, 6))


def test_rank_fn_examples():
    assert rank_fn(P("[1423]"), 2, 2) == 1
    e = Permutation.identity(4)
    assert all(rank_fn(e, p, q) == min(p, q) for p in range(1, 5) for q in range(1, 5))
    assert rank_fn(Permutation.longest(4), 2, 2) == 0
    with pytest.raises(ValueError):
        rank_fn(e, 0, 1)


def test_u_v_examples():
    assert u_of(5, 2) == P("[21345]") and v_of(5, 3) == P("[12534]")
    assert u_of(5, 1) == v_of(5, 5) == Permutation.identity(5)
    assert w_of(4, 2, 4) == P("[2134]")
    with pytest.raises(ValueError):
        u_of(4, 5)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_u_v_are_shortest(n):
    perms = Permutation.all(n)
    for i in range(1, n + 1):
        assert u_of(n, i).length() == i - 1
        assert u_of(n, i)(i) == 1
        assert min(w.length() for w in perms if w(i) == 1) == i - 1
        assert v_of(n, i).length() == n - i
        assert v_of(n, i)(i) == n
        assert min(w.length() for w in perms if w(i) == n) == n - i


def test_w_of_general():
    for i, j in itertools.permutations(range(1, 5), 2):
        w = w_of(4, i, j)
        assert w(i) == 1 and w(j) == 4
        shortest = min(u.length() for u in S4 if u(i) == 1 and u(j) == 4)
        assert w.length() == shortest
        if i < j:
            assert w == u_of(4, i) * v_of(4, j)


# -- Bruhat order


def test_bruhat_agrees_with_subwords():
    for u in S4:
        for w in S4:
            assert bruhat_leq(u, w) == subword_bruhat_leq(u, w), (u, w)


def test_bruhat_examples():
    e = Permutation.identity(4)
    assert all(bruhat_leq(e, w) for w in S4)
    assert bruhat_leq(P("[3142]"), P("[3241]"))
    a, b = P("[3214]"), P("[4132]")
    assert not bruhat_leq(a, b) and not bruhat_leq(b, a)
    w0 = Permutation.longest(4)
    for i in range(1, 5):
        for j in range(1, 5):
            assert bruhat_leq(u_of(4, i), w0 * v_of(4, j)) == (i <= j)
    with pytest.raises(ValueError):
        bruhat_leq(e, Permutation.identity(3))


# -- ideals


def test_schubert_ideals_of_u_and_v():
    for i in range(1, 5):
        assert ideals_equal(schubert_determinantal_ideal(u_of(4, i)), w0_act(ja_ideal(4, i - 1, 0)))
        assert ideals_equal(schubert_determinantal_ideal(v_of(4, i)), w0_act(k_ideal(4, i)))
    assert schubert_determinantal_ideal(Permutation.identity(4)).groebner().generators == ()


def test_w0_action():
    R = Ring(4, t=False)
    for i in range(5):
        gens = sorted(str(g) for g in w0_act(ja_ideal(4, i, 0)).generators)
        assert gens == sorted(str(R.z(1, k)) for k in range(1, i + 1))
    I = k_ideal(4, 2)
    assert ideals_equal(w0_act(w0_act(I)), I)


@pytest.mark.parametrize("w", [str(w) for w in S4])
def test_antidiagonal_certificate(w):
    I = schubert_determinantal_ideal(P(w))
    assert radical_certificate(I, DiagonalTwist((4, 3, 2, 1))) == CERTIFIED_RADICAL


# -- Schubert polynomials


def test_schubert_polynomial_basics():
    assert schubert_polynomial(Permutation.identity(4)) == XPoly(3, {(0, 0, 0): 1})
    assert schubert_polynomial(Permutation.longest(4)) == XPoly.monomial(3, [3, 2, 1])
    assert schubert_polynomial(P("[2134]")) == x(1)
    assert schubert_polynomial(P("[1324]")) == x(1) + x(2)
    assert schubert_polynomial(P("[1432]")) == x(1) * x(1) * x(2) + x(1) * x(2) * x(2) + x(1) * x(1) * x(3) + \
        x(1) * x(2) * x(3) + x(2) * x(2) * x(3)


@given(st.sampled_from(Permutation.all(5)))
def test_schubert_polynomial_shape(w):
    S = schubert_polynomial(w)
    assert S.is_homogeneous() and S.degree() == w.length()
    assert all(c > 0 for c in S.terms.values())


@pytest.mark.parametrize("w", [str(w) for w in Permutation.all(3)] + NAMED_S4)
def test_knutson_miller(w):
    w = P(w)
    md = multidegree(schubert_determinantal_ideal(w))
    assert md == schubert_polynomial(w).widen(w.n)


# -- class formula


def test_class_formula_examples():
    assert class_formula(HF.parse("2,4,4,4")) == x(1)
    assert class_formula(HF.full(4)) == XPoly(3, {(0, 0, 0): 1})
    with pytest.raises(ValueError):
        class_formula(HF.parse("2,2"))


def test_class_formula_identity_is_degree_three():
    # for h = id the nilpotent fiber has codimension 3; its top primes are
    # J_i^0 + K_i (i < n), each of multiplicity 2, matching w[i+1, i]
    cls = class_formula(HF.identity(4))
    expected = (schubert_polynomial(P("[4123]")) + schubert_polynomial(P("[2413]")) +
                schubert_polynomial(P("[2341]"))) * 2
    assert cls == expected
    assert cls.degree() == 3
    printed = (schubert_polynomial(P("[1423]")) + schubert_polynomial(P("[2143]")) +
               schubert_polynomial(P("[2314]"))) * 2
    assert printed.degree() == 2 and printed != cls


@pytest.mark.parametrize("h", [str(h) for h in HF.all(4)])
def test_class_formula_matches_multidegree(h):
    from hessex.hessenberg import e_matrix, hessenberg_ideal

    h = HF.parse(h)
    md = multidegree(hessenberg_ideal(e_matrix(4, 1, 4), h))
    assert md == class_formula(h).widen(4)
