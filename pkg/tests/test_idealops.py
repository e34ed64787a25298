import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hessex.hessenberg import HessenbergFunction as HF
from hessex.hessenberg import (
    e_matrix,
    ev,
    hessenberg_ideal,
    ja_ideal,
    jt_ideal,
    k_ideal,
    minimal_sheet_line,
)
from hessex.idealops import (
    CERTIFIED_RADICAL,
    INCONCLUSIVE,
    Ideal,
    eliminate,
    ideal_contains,
    ideal_intersection,
    ideal_product,
    ideal_quotient,
    ideal_sum,
    ideals_equal,
    k_polynomial_monomial,
    krull_dimension,
    min_hitting_set,
    multidegree,
    radical_certificate,
    saturate,
)
from hessex.minors import minor
from hessex.polycore import PAPER, QQ, S, DiagonalTwist, Lex, Ring
from hessex.schubert import Permutation, schubert_determinantal_ideal, schubert_polynomial, w0_act
from hessex.xpoly import XPoly

R4 = Ring(4, t=True)
R4S = Ring(4, t=True, s=True)
Z4 = Ring(4, t=False)


def line(R):
    return Ideal(R, [R.t * R.z(1, 1) + R.z(4, 1)])


# -- sums and products


def test_product_generators():
    P = ideal_product(jt_ideal(4, 1, R4), k_ideal(4, 2, R4))
    assert len(P.generators) == 3


def test_sum_with_zero_and_k0():
    I = k_ideal(4, 2, R4)
    assert ideals_equal(I + Ideal(R4, []), I)
    K0 = k_ideal(4, 0, R4)
    assert K0.is_unit()
    assert ideals_equal(ideal_product(K0, I), I)


def test_ring_mismatch():
    with pytest.raises(ValueError):
        ideal_sum(k_ideal(4, 2, R4), k_ideal(4, 2, Z4))


# -- elimination and saturation


def test_eliminate_s_from_jt():
    R = R4S
    J = jt_ideal(4, 2, R)
    E = eliminate(J + Ideal(R, [R.s * R.t - 1]), [S])
    assert E.ring == R4
    assert ideals_equal(E, jt_ideal(4, 2, R4))


def test_eliminate_trivial():
    R = R4S
    E = eliminate(Ideal(R, [R.s]), [S])
    assert E.is_zero()


def test_eliminate_counterexample_grows():
    R = R4S
    I = jt_ideal(4, 2, R) + k_ideal(4, 2, R) + Ideal(R, [R.s * R.t - 1])
    E = eliminate(I, [S])
    base = jt_ideal(4, 2, R4) + k_ideal(4, 2, R4)
    q = R4.z(2, 1) * R4.z(1, 2) - R4.z(2, 2) * R4.z(1, 1)
    assert ideal_contains(E, base) and not ideal_contains(base, E)
    assert E.contains(q)


def test_saturate_monomial():
    R = R4
    assert ideals_equal(saturate(Ideal(R, [R.t * R.z(1, 1)]), R.t), Ideal(R, [R.z(1, 1)]))
    with pytest.raises(ValueError):
        saturate(Ideal(R, [R.t]), R.zero())
    with pytest.raises(ValueError):
        ideal_quotient(Ideal(R, [R.t]), R.zero())


@pytest.mark.parametrize("i,j", [(i, j) for j in range(1, 5) for i in range(0, j)])
def test_jt_plus_k_saturated(i, j):
    I = jt_ideal(4, i, R4) + k_ideal(4, j, R4)
    assert ideals_equal(saturate(I, R4.t), I)


def test_saturate_by_determinant():
    I = hessenberg_ideal(minimal_sheet_line(4).matrix(), HF.parse("2,4,4,4"))
    Z = [[I.ring.z(i, j) for j in range(1, 5)] for i in range(1, 5)]
    d = minor(Z, range(4), range(4))
    assert ideals_equal(saturate(I, d), I)


def test_saturation_idempotent_and_contains():
    R = R4
    for I in (jt_ideal(4, 2, R) + k_ideal(4, 2, R), hessenberg_ideal(minimal_sheet_line(4).matrix(), HF.identity(4))):
        S1 = saturate(I, R.t)
        assert ideal_contains(S1, I)
        assert ideals_equal(saturate(S1, R.t), S1)


# -- intersection and quotient


def test_intersection_example():
    I = ideal_intersection(k_ideal(4, 2, R4), line(R4))
    assert ideals_equal(I, ideal_product(line(R4), k_ideal(4, 2, R4)))
    assert I.ring == R4


def test_intersection_with_unit():
    I = k_ideal(4, 2, R4)
    assert ideals_equal(ideal_intersection(I, Ideal.unit(R4)), I)


@pytest.mark.parametrize("i,j", [(i, j) for j in range(1, 4) for i in range(1, j + 1)])
def test_product_equals_intersection(i, j):
    J, K = jt_ideal(4, i, R4), k_ideal(4, j, R4)
    P = ideal_product(J, K)
    assert ideals_equal(P, ideal_intersection(J, K))
    assert radical_certificate(P) == CERTIFIED_RADICAL


@pytest.mark.parametrize("i,j", [(i, j) for j in range(2, 4) for i in range(1, j)])
def test_ev0_product_radical_under_twist(i, j):
    J, K = ja_ideal(4, i, 0), k_ideal(4, j)
    P = ideal_product(J, K)
    assert ideals_equal(P, ideal_intersection(J, K))
    assert radical_certificate(P, DiagonalTwist((1, 2, 3, 4))) == CERTIFIED_RADICAL


def test_quotient_examples():
    R = R4
    assert ideals_equal(ideal_quotient(Ideal(R, [R.t * R.z(1, 1)]), R.t), Ideal(R, [R.z(1, 1)]))
    I = hessenberg_ideal(minimal_sheet_line(4).matrix(), HF.parse("2,4,4,4"))
    assert ideals_equal(ideal_quotient(I, R.t - 1), I)
    J = jt_ideal(4, 2, R) + k_ideal(4, 2, R)
    Q = ideal_quotient(J, R.t)
    assert Q.contains(R.z(2, 1) * R.z(1, 2) - R.z(2, 2) * R.z(1, 1))
    assert not ideals_equal(Q, J)


VARS2 = Ring(2, t=False)


def rand_poly(rng, R, deg=2, terms=3):
    out = R.zero()
    for _ in range(terms):
        e = [0] * R.nvars
        for _ in range(rng.randint(0, deg)):
            e[rng.randrange(R.nvars)] += 1
        out = out + R.monomial(e, QQ(rng.randint(-3, 3)))
    return out


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_intersection_membership_oracle(seed):
    rng = random.Random(seed)
    R = VARS2
    I = Ideal(R, [rand_poly(rng, R) for _ in range(rng.randint(1, 3))])
    J = Ideal(R, [rand_poly(rng, R) for _ in range(rng.randint(1, 3))])
    X = ideal_intersection(I, J)
    for _ in range(8):
        f = rand_poly(rng, R, 3, 4)
        assert X.contains(f) == (I.contains(f) and J.contains(f))
    for g in I.generators:
        for h in J.generators:
            assert X.contains(g * h)


# -- comparisons


def test_inclusions_lattice():
    pairs = [(i, j) for j in range(1, 5) for i in range(0, j)]
    for i, j in pairs:
        A = jt_ideal(4, i, R4) + k_ideal(4, j, R4)
        for k, l in pairs:
            B = jt_ideal(4, k, R4) + k_ideal(4, l, R4)
            assert ideal_contains(B, A) == (i <= k and j >= l), (i, j, k, l)


def test_pt_pairwise_incomparable():
    from hessex.hessenberg import pt_ideal

    h = HF.parse("2,4,4,4")
    P1, P2 = pt_ideal(h, 1), pt_ideal(h, 2)
    assert not ideal_contains(P1, P2) and not ideal_contains(P2, P1)


def test_radical_inconclusive():
    assert radical_certificate(Ideal(Z4, [Z4.z(1, 1) ** 2])) == INCONCLUSIVE


# -- dimension


def test_dimension_examples():
    assert krull_dimension(k_ideal(4, 2, R4)) == 15
    assert krull_dimension(Ideal(Z4, [])) == 16
    # X_v is cut out by w0 . I_{w0 v}
    w0 = Permutation.longest(4)
    for v, d in (("[4132]", 14), ("[3421]", 15)):
        X = w0_act(schubert_determinantal_ideal(w0 * Permutation.parse(v)))
        assert krull_dimension(X) == d


def test_unit_dimension_warns():
    with pytest.warns(UserWarning):
        assert krull_dimension(Ideal.unit(Z4)) == -1


def test_dimension_order_invariant():
    for I in (k_ideal(4, 2, R4), jt_ideal(4, 2, R4) + k_ideal(4, 3, R4), hessenberg_ideal(e_matrix(4, 1, 4), HF.identity(4))):
        assert krull_dimension(I, PAPER) == krull_dimension(I, Lex())


def test_min_hitting_set():
    assert min_hitting_set([{0, 1}, {1, 2}, {3}]) == 2
    assert min_hitting_set([]) == 0


# -- multidegree


def test_multidegree_zero_ideal():
    assert multidegree(Ideal(Z4, [])) == XPoly(4, {(0, 0, 0, 0): 1})


def test_multidegree_of_k2_is_schubert():
    w = Permutation.parse("[1423]")  # w0-twist of K2 is the Schubert ideal of v[2]
    assert multidegree(k_ideal(4, 2)) == schubert_polynomial(w)


def test_multidegree_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        multidegree(Ideal(Z4, [Z4.z(1, 1) + Z4.z(1, 2)]))


def test_k_polynomial_pivot_matches_taylor():
    R = Ring(3, t=False)
    rng = random.Random(3)
    for _ in range(10):
        monos = []
        for _ in range(rng.randint(1, 6)):
            e = [rng.randint(0, 2) for _ in range(R.nvars)]
            if any(e):
                monos.append(R.pack(e))
        a = k_polynomial_monomial(monos, R, pivot_threshold=100)
        b = k_polynomial_monomial(monos, R, pivot_threshold=0)
        assert a == b


@pytest.mark.parametrize("h", [str(h) for h in HF.all(4)])
def test_family_multidegree_matches_fibers(h):
    h = HF.parse(h)
    I = hessenberg_ideal(minimal_sheet_line(4).matrix(), h)
    md = multidegree(I)
    assert multidegree(ev(0, I)) == md
    assert multidegree(ev(1, I)) == md


# -- serialization


def test_json_roundtrip():
    I = jt_ideal(4, 2, R4) + k_ideal(4, 2, R4)
    data = I.to_json(PAPER)
    J = Ideal.from_json(data)
    assert J.ring == I.ring and ideals_equal(I, J)
    assert data["groebner"]["basis"] == [str(g) for g in I.groebner()]
