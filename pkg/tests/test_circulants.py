import pytest
from hypothesis import given, strategies as st

from matchbound.circulants import (
    RingBlock,
    best_ring_block_det,
    charlike_poly,
    cycle_orientation,
    cycle_skew,
    gauge_reduce,
    lucas_det,
    lucas_number,
    matching_poly_identity_check,
    padd,
    pdivexact,
    pmul,
    poly_determinant,
    ring_block_det,
    root_sequence_value,
    sequence_monotonicity_check,
    GOLDEN_SQUARED,
)
from matchbound.errors import ParameterError
from matchbound.graphs import cycle_graph
from matchbound.pfaffian import all_orientations, exact_determinant, matmul


def test_cycle_skew_determinants():
    assert exact_determinant(cycle_skew(6, 1)) == 4
    assert exact_determinant(cycle_skew(6, -1)) == 0
    assert exact_determinant(cycle_skew(7, 1)) == 0
    assert exact_determinant(cycle_skew(7, -1)) == 0


def test_cycle_skew_row_pattern():
    t = cycle_skew(4, 1)
    assert [abs(x) for x in t[0]] == [0, 1, 0, 1]
    assert t[0][3] == 1 and t[3][0] == -1


def test_cycle_skew_needs_n3():
    with pytest.raises(ParameterError):
        cycle_skew(2, 1)


def test_lucas_numbers():
    assert [lucas_number(n) for n in range(1, 11)] == [1, 3, 4, 7, 11, 18, 29, 47, 76, 123]


def test_lucas_det_values():
    assert lucas_det(6, 1) == 400          # (18 + 2)^2
    assert lucas_det(6, -1) == 256         # (18 - 2)^2
    assert lucas_det(5, 1) == lucas_det(5, -1) == 121


def test_lucas_det_matches_exact_determinant():
    for n in range(3, 25):
        for sign in (1, -1):
            t = cycle_skew(n, sign)
            t2 = matmul(t, t)
            m = [[(1 if i == j else 0) - t2[i][j] for j in range(n)] for i in range(n)]
            assert exact_determinant(m) == lucas_det(n, sign), (n, sign)


def test_gauge_reduce_identity_cases():
    # all edges along the cycle: already canonical with closing edge n->1
    sign, diag = gauge_reduce(cycle_orientation(6, -1))
    assert sign == -1 and diag == (1,) * 6
    # flipping every edge is gauged by the alternating diagonal (n even)
    flipped = cycle_orientation(6, -1)
    for i in range(1, 6):
        flipped = flipped.flip(i, i + 1)
    flipped = flipped.flip(6, 1)
    sign, diag = gauge_reduce(flipped)
    assert sign == -1
    assert diag in ((1, -1) * 3, (-1, 1) * 3)


def test_gauge_reduce_exhaustive_c8():
    # gauge_reduce verifies D S D against the canonical matrix internally
    signs = [gauge_reduce(o)[0] for o in all_orientations(cycle_graph(8))]
    assert set(signs) == {1, -1}


@given(st.integers(min_value=0, max_value=2 ** 12 - 1))
def test_gauge_reduce_c12_random(mask):
    g = cycle_graph(12)
    edges = g.sorted_edges()
    directed = frozenset(
        (u, v) if not (mask >> i) & 1 else (v, u) for i, (u, v) in enumerate(edges))
    from matchbound.pfaffian import Orientation

    sign, diag = gauge_reduce(Orientation(g, directed))
    assert sign in (1, -1) and all(d in (1, -1) for d in diag)


def test_gauge_reduce_rejects_non_cycle():
    from matchbound.graphs import path_graph
    from matchbound.pfaffian import Orientation

    g = path_graph(4)
    with pytest.raises(ParameterError):
        gauge_reduce(Orientation(g, frozenset({(1, 2), (2, 3), (3, 4)})))


def test_ring_block_reductions():
    assert ring_block_det(RingBlock(6, 1, (3,) * 6)) == 400 == lucas_det(6, 1)
    assert ring_block_det(RingBlock(5, 1, (3,) * 5)) == 121
    # bare cycle: det(-T^2) = (det T)^2
    assert ring_block_det(RingBlock(6, 1, (2,) * 6)) == 16
    assert ring_block_det(RingBlock(6, -1, (2,) * 6)) == 0
    assert ring_block_det(RingBlock(7, 1, (2,) * 7)) == 0
    assert best_ring_block_det(6, (2,) * 6) == 16


def test_ring_block_validation():
    with pytest.raises(ParameterError):
        RingBlock(6, 1, (3,) * 5)
    with pytest.raises(ParameterError):
        RingBlock(6, 1, (1,) * 6)


def test_poly_arithmetic():
    assert padd((1, 2), (0, 0, 5)) == (1, 2, 5)
    assert pmul((1, 1), (1, -1)) == (1, 0, -1)
    assert pdivexact((1, 0, -1), (1, 1)) == (1, -1)


def test_poly_determinant_small():
    # det [[1, t], [-t, 1]] = 1 + t^2
    m = [[(1,), (0, 1)], [(0, -1), (1,)]]
    assert poly_determinant(m) == (1, 0, 1)


def test_charlike_poly_known():
    assert charlike_poly(4, -1) == (1, 0, 4)
    assert charlike_poly(4, 1) == (1, 0, 4, 0, 4)
    assert charlike_poly(5, 1) == charlike_poly(5, -1) == (1, 0, 5, 0, 5)


def test_matching_poly_identities_range():
    for n in range(3, 17):
        assert matching_poly_identity_check(n)["ok"], n


def test_even_case_top_coefficient_difference():
    # det(I + t T+) - det(I + t T-) = 4 t^n for even n
    for n in (4, 6, 8):
        plus, minus = charlike_poly(n, 1), charlike_poly(n, -1)
        padded = list(minus) + [0] * (n + 1 - len(minus))
        padded[n] += 4
        assert list(plus) == padded


def test_poly_det_evaluated_at_one_squares_to_lucas_det():
    for n in range(3, 13):
        for sign in (1, -1):
            assert sum(charlike_poly(n, sign)) ** 2 == lucas_det(n, sign)


def test_monotonicity_suite():
    res = sequence_monotonicity_check(40)
    assert res["ok"]


def test_cross_power_examples():
    # a_5 < a_7 as integers: 121^7 < 841^5
    assert 121 ** 7 < (lucas_number(7) ** 2) ** 5
    # n = 6 attains 20^(1/3) exactly: 400^3 == 20^6
    assert 400 ** 3 == 20 ** 6


def test_limit_display_value():
    assert abs(root_sequence_value(41) - GOLDEN_SQUARED) < 1e-3
