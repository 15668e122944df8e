from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from probelab.lp import LPInfeasible, LPUnbounded, exact_lp_max

from oracles import vertices


def test_maximin_on_interval():
    # variables (x, t): max t, t <= x, t <= 2 - x, 0 <= x <= 2
    r = exact_lp_max([0, 1], [[-1, 1], [1, 1], [-1, 0], [1, 0]], [0, 2, 0, 2])
    assert r.value == 1
    assert r.x == (1, 1)


def test_square_vertex_is_deterministic():
    rows = [[1, 0], [-1, 0], [0, 1], [0, -1]]
    first = exact_lp_max([1, 0], rows, [1, 1, 1, 1])
    assert first.value == 1
    assert first.x[0] == 1
    for _ in range(3):
        assert exact_lp_max([1, 0], rows, [1, 1, 1, 1]) == first


def test_rectangle_first_round():
    rows = [[-1, 0, 1], [1, 0, 1], [0, -1, 1], [0, 1, 1]]
    assert exact_lp_max([0, 0, 1], rows, [0, 1, 0, 3]).value == F(1, 2)


def test_equalities_and_negative_rhs():
    r = exact_lp_max([1, 1], [[1, 0], [0, 1], [-1, 0]], [3, 3, -1], [[1, -1]], [1])
    assert r.value == 5
    assert r.x == (3, 2)


def test_infeasible_and_unbounded_are_distinct():
    with pytest.raises(LPInfeasible):
        exact_lp_max([1], [[1], [-1]], [1, -2])
    with pytest.raises(LPUnbounded):
        exact_lp_max([1, 0], [[-1, 0]], [0])


def test_redundant_equalities():
    r = exact_lp_max([1, 0], [[1, 0], [0, 1]], [5, 5], [[0, 1], [0, 2]], [1, 2])
    assert r.value == 5


coef = st.integers(-4, 4)


@given(st.lists(st.tuples(coef, coef, st.integers(1, 8)), min_size=0, max_size=4),
       st.tuples(coef, coef))
def test_lp_matches_vertex_enumeration(cuts, c):
    rows = [(1, 0, 5), (-1, 0, 5), (0, 1, 5), (0, -1, 5)] + [r for r in cuts if r[0] or r[1]]
    res = exact_lp_max(list(c), [r[:2] for r in rows], [r[2] for r in rows])
    best = max(c[0] * v[0] + c[1] * v[1] for v in vertices(rows, 2))
    assert res.value == best
    assert all(r[0] * res.x[0] + r[1] * res.x[1] <= r[2] for r in rows)
