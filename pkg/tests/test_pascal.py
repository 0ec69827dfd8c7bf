"""Row-by-row triangle construction for submultiset counts."""

import random

import pytest

from conftest import brute_subs, random_spec
from multicomb import (
    PrimarySpec,
    build_subs_table,
    count_subs_dp,
    multiboolean_cardinality,
    subs_row_next,
)
from multicomb.pascal import _subs_row_next_windowed


def test_row_next_small():
    assert subs_row_next((1,), 2) == (1, 1, 1)
    assert subs_row_next((1, 1, 1), 2) == (1, 2, 3, 2, 1)
    assert subs_row_next((1, 2, 3, 2, 1), 1) == (1, 3, 5, 5, 3, 1)
    with pytest.raises(ValueError):
        subs_row_next((1,), 0)


def test_row_next_matches_window_reference():
    rng = random.Random(1616)
    for _ in range(300):
        row = tuple(rng.randint(0, 50) for _ in range(rng.randint(1, 12)))
        k = rng.randint(1, 9)
        assert subs_row_next(row, k) == _subs_row_next_windowed(row, k)


def test_table_rows():
    table = build_subs_table(PrimarySpec((2, 2, 1)), keep_all_rows=True)
    assert table.rows == (
        (1, 1, 1),
        (1, 2, 3, 2, 1),
        (1, 3, 5, 5, 3, 1),
    )
    assert table.final_row == (1, 3, 5, 5, 3, 1)


def test_table_reference_rows():
    assert build_subs_table(PrimarySpec((4, 3, 3, 1))).final_row == (
        1, 4, 9, 16, 23, 27, 27, 23, 16, 9, 4, 1,
    )
    assert build_subs_table(PrimarySpec((1, 1, 1, 1))).final_row == (1, 4, 6, 4, 1)


def test_empty_table():
    table = build_subs_table(PrimarySpec(()))
    assert table.rows == ((1,),)
    assert table.final_row == (1,)


def test_row_invariants():
    rng = random.Random(1717)
    for _ in range(200):
        spec = random_spec(rng, max_n=6, max_k=6, min_n=1)
        table = build_subs_table(spec, keep_all_rows=True)
        assert len(table.rows) == spec.n
        prev_sum = 1
        for row, k in zip(table.rows, spec.k):
            assert row == tuple(reversed(row))
            assert sum(row) == prev_sum * (k + 1)
            prev_sum = sum(row)
        assert sum(table.final_row) == multiboolean_cardinality(spec)


def test_count_dp_matches_brute():
    rng = random.Random(1818)
    for _ in range(300):
        spec = random_spec(rng, max_n=6, max_k=6)
        m = rng.randint(0, spec.size + 2)
        assert count_subs_dp(spec, m) == brute_subs(spec.k, m)


def test_count_dp_matches_full_table():
    rng = random.Random(1919)
    for _ in range(100):
        spec = random_spec(rng, max_n=7, max_k=7)
        final = build_subs_table(spec).final_row
        for m in range(spec.size + 1):
            assert count_subs_dp(spec, m) == final[m]
        assert count_subs_dp(spec, spec.size + 1) == 0


def test_count_dp_edges():
    assert count_subs_dp(PrimarySpec(()), 0) == 1
    assert count_subs_dp(PrimarySpec(()), 1) == 0
    with pytest.raises(ValueError):
        count_subs_dp(PrimarySpec((2,)), -1)
