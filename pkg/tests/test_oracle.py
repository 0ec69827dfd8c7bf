"""Brute-force enumeration oracle and its budget guard."""

import itertools
import random

import pytest

from conftest import brute_perms, brute_subs, random_spec
from multicomb import (
    BudgetExceededError,
    EnumBudget,
    PrimarySpec,
    count_perms_brute,
    count_subs_brute,
    enumerate_submultisets,
)


def test_enumeration_vectors():
    got = list(enumerate_submultisets(PrimarySpec((2, 1)), 2))
    assert got == [(1, 1), (2, 0)]
    assert list(enumerate_submultisets(PrimarySpec((2, 1)), 0)) == [(0, 0)]
    assert list(enumerate_submultisets(PrimarySpec((2, 1)), 4)) == []


def test_enumeration_is_lexicographic():
    rng = random.Random(2424)
    for _ in range(100):
        spec = random_spec(rng, max_n=5, max_k=4)
        m = rng.randint(0, spec.size)
        got = list(enumerate_submultisets(spec, m))
        assert got == sorted(got)
        assert len(got) == len(set(got))


def test_enumeration_complete():
    rng = random.Random(2525)
    for _ in range(100):
        spec = random_spec(rng, max_n=5, max_k=4)
        m = rng.randint(0, spec.size + 1)
        want = {
            vec
            for vec in itertools.product(*(range(v + 1) for v in spec.k))
            if sum(vec) == m
        }
        assert set(enumerate_submultisets(spec, m)) == want


def test_counts_match_reference():
    rng = random.Random(2626)
    for _ in range(150):
        spec = random_spec(rng, max_n=5, max_k=4)
        m = rng.randint(0, spec.size + 1)
        assert count_subs_brute(spec, m) == brute_subs(spec.k, m)
        assert count_perms_brute(spec, m) == brute_perms(spec.k, m)


def test_budget_guard():
    spec = PrimarySpec((4, 4, 4, 4, 4, 4))
    with pytest.raises(BudgetExceededError):
        count_subs_brute(spec, 12, EnumBudget(10))
    # A generous budget changes nothing.
    assert count_subs_brute(spec, 12, EnumBudget(10 ** 6)) == brute_subs(spec.k, 12)


def test_budget_validation():
    with pytest.raises(ValueError):
        EnumBudget(0)
    with pytest.raises(ValueError):
        EnumBudget(-5)
    assert EnumBudget(3).max_states == 3


def test_budget_is_per_call():
    spec = PrimarySpec((3, 3, 3))
    budget = EnumBudget(10 ** 4)
    for _ in range(3):
        assert count_subs_brute(spec, 4, budget) == brute_subs(spec.k, 4)
