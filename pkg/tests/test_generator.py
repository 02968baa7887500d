import pytest
from hypothesis import given, settings, strategies as st

from oracles import cyclic_classes, necklace_count
from ooc2d import (
    MatrixCode,
    OneDimCode,
    ParameterError,
    auto_profile,
    enumerate_1d,
    filter_by_auto,
    format_wpr,
    lift_1d_to_2d,
    lift_and_expand,
)
from ooc2d.generator import (
    candidate_pool,
    code_from_record,
    code_record,
    onedim_from_record,
    onedim_record,
)

# necklace_count(12, 3) and cyclic_classes(12, 3) both give 19
APPENDIX_HEAD = [(1, 1, 10), (1, 2, 9), (1, 3, 8), (1, 4, 7), (1, 5, 6), (2, 1, 9)]


def test_enumerate_12_3():
    codes = enumerate_1d(12, 3)
    dops = [c.dop for c in codes]
    assert len(dops) == 19
    assert dops[:6] == APPENDIX_HEAD
    assert dops[-2:] == [(4, 4, 4), (5, 1, 6)]
    assert dops == sorted(dops)
    assert ((2, 5, 5) in dops) != ((5, 2, 5) in dops)


def test_weight_one():
    assert [c.dop for c in enumerate_1d(7, 1)] == [(7,)]


def test_full_weight():
    assert [c.dop for c in enumerate_1d(5, 5)] == [(1, 1, 1, 1, 1)]


def test_bad_params():
    with pytest.raises(ParameterError):
        enumerate_1d(12, 13)
    with pytest.raises(ParameterError):
        enumerate_1d(12, 0)


@pytest.mark.parametrize(
    "n,w", [(n, w) for n in range(1, 15) for w in range(1, n + 1) if n <= 10 or w in (3, 4, 7)]
)
def test_counts_match_exhaustive_enumeration(n, w):
    codes = enumerate_1d(n, w)
    assert len(codes) == necklace_count(n, w)
    classes = {min(c.bits[k:] + c.bits[:k] for k in range(n)) for c in codes}
    assert classes == cyclic_classes(n, w)
    for c in codes:
        assert sum(c.dop) == n and c.dop[-1] == max(c.dop)


@pytest.mark.parametrize("n,w", [(16, 4), (16, 5), (20, 4), (24, 6)])
def test_counts_match_necklace_formula(n, w):
    assert len(enumerate_1d(n, w)) == necklace_count(n, w)


def test_lift_appendix_items():
    assert lift_1d_to_2d(OneDimCode((1, 1, 10)), 4).grid == (
        (1, 0, 0), (1, 0, 0), (1, 0, 0), (0, 0, 0))
    item19 = lift_1d_to_2d(OneDimCode((5, 1, 6)), 4)
    assert format_wpr(item19) == "1'0 2'1 3'1"
    assert item19.grid == ((1, 0, 0), (0, 1, 0), (0, 1, 0), (0, 0, 0))


def test_lift_and_expand_pool():
    codes = enumerate_1d(12, 3)
    pool = lift_and_expand(codes, 4, 3)
    assert len(pool) <= 19 * 4
    assert len(set(pool)) == len(pool)
    assert all(c.w == 3 and (c.L, c.N) == (4, 3) for c in pool)
    assert pool[0].grid == ((1, 0, 0), (1, 0, 0), (1, 0, 0), (0, 0, 0))
    assert pool[1].grid == ((0, 0, 0), (1, 0, 0), (1, 0, 0), (1, 0, 0))
    assert lift_and_expand(codes, 4, 3) == pool


def test_lift_and_expand_length_mismatch():
    with pytest.raises(ParameterError):
        lift_and_expand([OneDimCode((1, 1, 10))], 5, 3)


def test_filter_by_auto(code_x):
    periodic = lift_1d_to_2d(OneDimCode((4, 4, 4)), 4)
    assert filter_by_auto([periodic], 2) == []
    assert [s.lambda_a for s in filter_by_auto([periodic], 3)] == [3]
    kept = filter_by_auto([code_x], 2)
    assert kept[0].code == code_x and kept[0].lambda_a == 2


@settings(max_examples=30)
@given(st.integers(2, 5), st.integers(2, 4), st.integers(1, 4), st.integers(0, 4), st.integers(0, 4))
def test_filter_idempotent_and_monotone(L, N, w, lo, hi):
    if w > L * N:
        return
    pool = lift_and_expand(enumerate_1d(L * N, w), L, N)
    lo, hi = sorted((lo, hi))
    small = filter_by_auto(pool, lo)
    assert filter_by_auto(small, lo) == small
    big = {s.code for s in filter_by_auto(pool, hi)}
    assert {s.code for s in small} <= big
    assert all(auto_profile(s.code).constraint <= lo for s in small)
    assert len({s.code for s in small}) == len(small)


def test_candidate_pool_drops_periodic():
    pool = candidate_pool(4, 3, 3, 2)
    assert all(s.lambda_a <= 2 for s in pool)
    assert MatrixCode.from_wpr(4, 3, [(0, 0), (0, 1), (0, 2)]) not in {s.code for s in pool}


def test_records_round_trip(code_x):
    rec = code_record(7, code_x)
    assert rec == {
        "id": 7, "L": 4, "N": 5, "w": 7,
        "wpr": [[1, 0], [3, 0], [2, 1], [4, 1], [1, 4], [3, 4], [4, 4]],
        "dopr": [[1, 0], [3, 1], [2, 0], [4, 3], [1, 0], [3, 0], [4, 1]],
        "lambda_a": 2,
    }
    assert code_from_record(rec).wpr == code_x.wpr
    del rec["wpr"]
    assert code_from_record(rec) == code_x
    one = OneDimCode((1, 2, 9))
    assert onedim_from_record(onedim_record(0, one)) == one
