import pytest
from hypothesis import given
from hypothesis import strategies as st

from hessex.hessenberg import (
    HessenbergFunction,
    JordanData,
    Partition,
    Tableau,
    associated_nilpotent,
    block_tableaux,
    build_tableau,
    constant_matrix,
    e_matrix,
    ev,
    ev_matrix,
    hessenberg_ideal,
    ja_ideal,
    jt_ideal,
    k_ideal,
    lambda_of,
    minimal_sheet_closed_form,
    minimal_sheet_line,
    p_B,
    parse_matrix,
    psi,
    pt_ideal,
    rank_condition_ideal,
    sheet_line,
)
from hessex.idealops import Ideal, ideal_product, ideal_sum, ideals_equal
from hessex.polycore import QQ, Ring, z
from hessex.schubert import w0_act

HF = HessenbergFunction
Z4 = Ring(4, t=False)
R4 = Ring(4, t=True)
ALL4 = HF.all(4)


def E(n, pairs):
    M = [[0] * n for _ in range(n)]
    for a, b in pairs:
        M[a - 1][b - 1] = 1
    return M


# -- Hessenberg functions


def test_count_and_validation():
    assert len(ALL4) == 14
    assert len(HF.all(3)) == 5
    with pytest.raises(ValueError):
        HF([1, 1, 3])
    with pytest.raises(ValueError):
        HF([3, 2, 3])


def test_corners_examples():
    h = HF.parse("2,4,4,4")
    assert h.corners() == [1, 2] and h.i_star(1) == 1 and h.i_star(2) == 4
    full = HF.full(4)
    assert full.corners() == [1] and full.is_indecomposable()
    ident = HF.identity(4)
    assert ident.corners() == [1, 2, 3, 4]
    assert ident.decomposable_set() == [1, 2, 3] and not ident.is_indecomposable()
    assert h(0) == 0


@given(st.sampled_from(ALL4 + HF.all(5)))
def test_corner_one_always(h):
    assert 1 in h.corners()
    assert h.is_indecomposable() == (not h.decomposable_set())


# -- Jordan data and tableaux


def test_lambda_examples():
    jd = JordanData([(5, [3, 1]), (4, [1, 1])])
    assert lambda_of(jd) == Partition([4, 2])
    assert lambda_of(JordanData.nilpotent([2, 2, 1])) == Partition([2, 2, 1])
    assert lambda_of(JordanData.minimal(5)) == Partition([2, 1, 1, 1])


def test_normalization_order():
    jd = JordanData([(5, [3, 1]), (4, [1, 1])])
    assert [ev for ev, _ in jd.blocks] == [4, 5]
    # equal size: lexicographic on mu
    jd = JordanData([(1, [2]), (2, [1, 1])])
    assert [list(mu) for _, mu in jd.blocks] == [[1, 1], [2]]
    with pytest.raises(ValueError):
        JordanData([(1, [1]), (1, [2])])
    with pytest.raises(ValueError):
        Partition([1, 2])


def test_regular_semisimple_ties_keep_input_order():
    jd = JordanData.regular_semisimple([3, 1, 2])
    assert [ev for ev, _ in jd.blocks] == [3, 1, 2]


def test_example_tableau_and_nilpotent():
    jd = JordanData([(4, [1, 1]), (5, [3, 1])])
    T = build_tableau(jd)
    assert T.rows == [[2, 4, 5, 6], [1, 3]]
    assert associated_nilpotent(jd) == E(6, [(1, 3), (2, 4), (4, 5), (5, 6)])
    for block in block_tableaux(jd):
        assert block.column_strict_downward()


def test_minimal_and_regular_nilpotents():
    for n in (3, 4, 5):
        assert associated_nilpotent(JordanData.minimal(n)) == E(n, [(1, n)])
        assert associated_nilpotent(JordanData.regular_semisimple(range(1, n + 1))) == E(
            n, [(k, k + 1) for k in range(1, n)])


@given(st.lists(st.tuples(st.integers(-5, 5), st.lists(st.integers(1, 3), min_size=1, max_size=3)),
                min_size=1, max_size=3, unique_by=lambda b: b[0]))
def test_tableau_invariants(blocks):
    jd = JordanData([(ev, sorted(mu, reverse=True)) for ev, mu in blocks])
    lam = lambda_of(jd)
    assert sum(lam) == jd.n and list(lam) == sorted(lam, reverse=True)
    T = build_tableau(jd)
    assert sorted(x for r in T.rows for x in r) == list(range(1, jd.n + 1))
    assert T.shape == lam
    for block in block_tableaux(jd):
        assert block.column_strict_downward()
    N = associated_nilpotent(jd)
    assert all(sum(row) <= 1 for row in N)
    assert all(sum(N[r][c] for r in range(jd.n)) <= 1 for c in range(jd.n))


def test_tableau_rejects_bad_rows():
    with pytest.raises(ValueError):
        Tableau([[2, 1]])


# -- sheet lines


def test_minimal_sheet_line():
    sl = minimal_sheet_line(4)
    X = sl.matrix(R4)
    t = R4.t
    expected = [[R4.zero()] * 4 for _ in range(4)]
    expected[0][0] = t
    expected[0][3] = R4.one()
    assert X == expected


def test_nilpotent_sheet_line_is_constant():
    sl = sheet_line(JordanData.nilpotent([2, 1]))
    X = sl.matrix(Ring(3, t=True))
    assert all(e.is_constant() for row in X for e in row)


def test_example_sheet_line():
    jd = JordanData([(4, [1, 1]), (5, [3, 1])])
    sl = sheet_line(jd)
    assert sl.diagonal == [4, 4, 5, 5, 5, 5]
    R = Ring(6, t=True)
    X = sl.matrix(R)
    assert X[0][0] == 4 * R.t and X[2][2] == 5 * R.t and X[0][2] == R.one() and X[1][3] == R.one()


# -- rank conditions


def test_e14_rank_condition():
    h = HF.parse("2,4,4,4")
    I = rank_condition_ideal(e_matrix(4, 1, 4), h, 1)
    z = Z4.z
    z41 = z(4, 1)
    expected = Ideal(Z4, [z41 * (z(2, 1) * z(3, 2) - z(2, 2) * z(3, 1)), z41 * (z(2, 1) * z(4, 2) - z(2, 2) * z(4, 1)),
                          z41 * (z(3, 1) * z(4, 2) - z(3, 2) * z(4, 1))])
    assert ideals_equal(I, expected)
    assert len(I.generators) == 3
    assert ideals_equal(hessenberg_ideal(e_matrix(4, 1, 4), h), expected)


def test_full_rank_condition_is_zero():
    h = HF.full(4)
    for i in range(1, 5):
        assert rank_condition_ideal(e_matrix(4, 1, 4), h, i).is_zero()
    assert hessenberg_ideal(minimal_sheet_line(4).matrix(), h).is_zero()
    with pytest.raises(ValueError):
        rank_condition_ideal(e_matrix(4, 1, 4), h, 5)


def test_st_rank_condition():
    h = HF.parse("2,4,4,4")
    I = rank_condition_ideal(minimal_sheet_line(4).matrix(), h, 1)
    assert ideals_equal(I, ideal_product(jt_ideal(4, 1), k_ideal(4, 2, R4)))


def test_identity_e14_is_sum_of_products():
    I = hessenberg_ideal(e_matrix(4, 1, 4), HF.identity(4))
    expected = ideal_sum(*[ideal_product(ja_ideal(4, i, 0), k_ideal(4, i)) for i in (1, 2, 3)])
    assert ideals_equal(I, expected)


@pytest.mark.parametrize("h", [str(h) for h in ALL4])
def test_corner_reduction(h):
    h = HF.parse(h)
    s = constant_matrix(E(4, [(1, 1)]), Z4)
    for x in (e_matrix(4, 1, 4), minimal_sheet_line(4).matrix(), s):
        assert ideals_equal(hessenberg_ideal(x, h), hessenberg_ideal(x, h, corner_reduced=False))


@pytest.mark.parametrize("h", [str(h) for h in ALL4])
def test_closed_form(h):
    h = HF.parse(h)
    assert ideals_equal(hessenberg_ideal(minimal_sheet_line(4).matrix(), h), minimal_sheet_closed_form(h))


@pytest.mark.parametrize("h", [str(h) for h in ALL4])
def test_fibers_are_evaluations(h):
    h = HF.parse(h)
    sl = minimal_sheet_line(4)
    I = hessenberg_ideal(sl.matrix(), h)
    for a in (0, 1, 2):
        assert ideals_equal(ev(a, I), hessenberg_ideal(sl.at(a), h))
    assert ideals_equal(ev(0, I), hessenberg_ideal(e_matrix(4, 1, 4), h))
    # s_a = g (a s) g^-1 with g unipotent upper triangular, so I_{s_a} is
    # I_s after z[1,j] -> z[1,j] + z[4,j] / a
    s = constant_matrix(E(4, [(1, 1)]), Z4)
    I_s = hessenberg_ideal(s, h)
    for a in (1, 2, -1):
        shift = {z(1, j): Z4.z(1, j) + Z4.z(4, j) * QQ(1, a) for j in range(1, 5)}
        moved = I_s.map(lambda g: g.substitute(shift))
        assert ideals_equal(hessenberg_ideal(sl.at(a), h), moved)


@pytest.mark.parametrize("h", [str(h) for h in ALL4])
def test_two_scheme_representatives(h):
    h = HF.parse(h)
    s = constant_matrix(E(4, [(1, 1)]), Z4)
    diag = constant_matrix([[3 if r == c == 0 else -1 if r == c else 0 for c in range(4)] for r in range(4)], Z4)
    assert ideals_equal(hessenberg_ideal(diag, h), hessenberg_ideal(s, h))
    shifted = constant_matrix([[2 * (r == c) + ((r, c) == (2, 3)) for c in range(4)] for r in range(4)], Z4)
    assert ideals_equal(hessenberg_ideal(shifted, h), hessenberg_ideal(e_matrix(4, 3, 4), h))


@pytest.mark.parametrize("h", ["2,4,4,4", "1,2,3,4", "2,3,4,4"])
def test_scaling_does_not_change_ideal(h):
    h = HF.parse(h)
    s = E(4, [(1, 1)])
    I = hessenberg_ideal(constant_matrix(s, Z4), h)
    for a in (2, -1):
        scaled = constant_matrix([[a * e for e in row] for row in s], Z4)
        assert ideals_equal(hessenberg_ideal(scaled, h), I)


# -- special families


def test_k2_generators():
    z = Z4.z
    expected = Ideal(Z4, [z(3, 2) * z(4, 1) - z(3, 1) * z(4, 2), z(2, 2) * z(4, 1) - z(2, 1) * z(4, 2),
                          z(2, 2) * z(3, 1) - z(2, 1) * z(3, 2)])
    assert ideals_equal(k_ideal(4, 2), expected)


def test_conventions():
    assert k_ideal(4, 4).is_zero()
    assert jt_ideal(4, 0).is_zero()
    assert k_ideal(4, 0).is_unit()
    assert p_B(Z4, []) == Z4.one()
    assert ideals_equal(ja_ideal(4, 2, 0), Ideal(Z4, [Z4.z(4, 1), Z4.z(4, 2)]))
    with pytest.raises(ValueError):
        k_ideal(4, 5)
    with pytest.raises(ValueError):
        jt_ideal(4, -1)


def test_pt_ideal():
    h = HF.parse("2,4,4,4")
    assert ideals_equal(pt_ideal(h, 1), k_ideal(4, 2, R4))
    assert ideals_equal(pt_ideal(h, 2), jt_ideal(4, 1))


def test_ev_and_psi():
    for i in range(5):
        assert ideals_equal(ev(0, jt_ideal(4, i)), ja_ideal(4, i, 0))
    f = Ideal(R4, [R4.t * R4.z(1, 1) + R4.z(4, 1)])
    assert ev(1, f).generators == (Z4.z(1, 1) + Z4.z(4, 1),)
    for a in (1, 2):
        for i in range(1, 5):
            for j in range(i, 5):
                lhs = psi(a, ideal_sum(ja_ideal(4, i - 1, a), k_ideal(4, j)))
                rhs = ideal_sum(w0_act(ja_ideal(4, i - 1, 0)), k_ideal(4, j))
                assert ideals_equal(lhs, rhs), (a, i, j)
    with pytest.raises(ZeroDivisionError):
        psi(0, k_ideal(4, 2))


def test_matrix_parsing():
    X = parse_matrix('[["t", "0"], ["1", "1/2"]]')
    assert X[0][0].ring.has_t and X[1][1] == X[1][1].ring.const(QQ(1, 2))
    Y = ev_matrix(3, X)
    assert Y[0][0] == Y[0][0].ring.const(3)


def test_jordan_json_roundtrip():
    jd = JordanData([(4, [1, 1]), ("5/2", [3, 1])])
    again = JordanData.from_json(jd.to_json())
    assert again.blocks == jd.blocks
