import pytest
from hypothesis import given, strategies as st

from conftest import X_SHIFTS, Y_SHIFTS, wpr
from oracles import shift_count_overlap
from ooc2d import (
    DegeneratePairError,
    MatrixCode,
    ParameterError,
    auto_profile,
    brute_force_overlap,
    column_shift,
    cross_profile,
    intersection_count,
    set_constraints,
)
from test_codes import matrix_codes


def test_intersection_counts(code_x, code_y):
    assert intersection_count(code_x, wpr(X_SHIFTS[1])) == 2
    assert intersection_count(code_x, code_x) == 7
    assert intersection_count(code_x, code_y) == 4


def test_intersection_dimension_mismatch(code_x):
    with pytest.raises(ParameterError):
        intersection_count(code_x, MatrixCode.from_wpr(4, 3, [(0, 0)]))


def test_listed_shifts_of_y(code_y):
    for p, text in enumerate(Y_SHIFTS):
        assert column_shift(code_y, p).wpr == wpr(text).wpr


def test_auto_example_three(code_x):
    prof = auto_profile(code_x)
    assert prof.values == (2, 1, 1, 2)
    assert list(prof.shifts) == [1, 2, 3, 4]
    assert prof.constraint == 2


def test_auto_example_four_y(code_y):
    assert auto_profile(code_y).constraint == 2


def test_auto_periodic_row():
    code = MatrixCode.from_wpr(4, 3, [(0, 0), (0, 1), (0, 2)])
    prof = auto_profile(code)
    assert prof.values == (3, 3)
    assert prof.constraint == 3


def test_auto_single_column_matrix():
    prof = auto_profile(MatrixCode.from_wpr(3, 1, [(0, 0), (2, 0)]))
    assert prof.values == () and prof.constraint == 0


def test_cross_example_four(code_x, code_y):
    prof = cross_profile(code_x, code_y)
    assert prof.values == (4, 2, 2, 2, 2)
    assert prof.constraint == 4
    assert cross_profile(code_x, column_shift(code_y, 1)).constraint == 4


def test_cross_disjoint_rows():
    a = MatrixCode.from_wpr(4, 5, [(0, 0), (0, 2)])
    b = MatrixCode.from_wpr(4, 5, [(1, 0), (3, 1)])
    assert cross_profile(a, b).values == (0, 0, 0, 0, 0)


def test_cross_degenerate(code_x):
    with pytest.raises(DegeneratePairError):
        cross_profile(code_x, column_shift(code_x, 3))


def test_brute_force_examples(code_x, code_y):
    assert brute_force_overlap(code_x, code_x, 1) == 2
    assert brute_force_overlap(code_x, [[0] * 5] * 4, 2) == 0
    assert brute_force_overlap(code_x, code_y, 0) == 4


def test_set_constraints(code_x, code_y):
    assert set_constraints([code_x]) == (2, 0)
    assert set_constraints([code_x, code_y]) == (2, 4)
    singles = [MatrixCode.from_wpr(4, 5, [(r, 0)]) for r in range(4)]
    assert set_constraints(singles) == (0, 0)
    with pytest.raises(DegeneratePairError):
        set_constraints([code_x, column_shift(code_x, 2)])
    with pytest.raises(ParameterError):
        set_constraints([])


@st.composite
def code_pairs(draw):
    a = draw(matrix_codes())
    cells = draw(
        st.sets(st.tuples(st.integers(0, a.L - 1), st.integers(0, a.N - 1)), min_size=1)
    )
    return a, MatrixCode(a.L, a.N, frozenset(cells))


@given(code_pairs())
def test_intersection_method_matches_grid_oracle(pair):
    x, y = pair
    auto = auto_profile(x)
    for tau, v in zip(auto.shifts, auto.values):
        assert v == shift_count_overlap(x.grid, x.grid, tau)
        assert v == brute_force_overlap(x, x, tau)
    if x == y:
        return
    cross = cross_profile(x, y)
    for tau, v in zip(cross.shifts, cross.values):
        # y shifted right by tau lines y[j - tau] up with x[j]
        assert v == shift_count_overlap(y.grid, x.grid, tau)
        assert v == brute_force_overlap(y, x, tau)


@given(code_pairs(), st.integers(0, 10), st.integers(0, 10))
def test_symmetry_and_shift_invariance(pair, p, q):
    x, y = pair
    la = auto_profile(x).constraint
    assert auto_profile(column_shift(x, p)).constraint == la
    assert 0 <= la <= x.w
    periodic = any(column_shift(x, t).wpr == x.wpr for t in range(1, x.N))
    assert (la == x.w) == periodic
    if x == y:
        return
    lc = cross_profile(x, y).constraint
    assert cross_profile(y, x).constraint == lc
    assert cross_profile(column_shift(x, p), column_shift(y, q)).constraint == lc
    assert 0 <= lc <= min(x.w, y.w)
