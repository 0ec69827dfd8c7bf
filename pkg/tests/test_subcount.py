"""Submultiset counting: general formula, composition DP, and class forms."""

import math
import random

import pytest

from conftest import brute_subs, random_spec
from multicomb import (
    PrimarySpec,
    count_onto_unbounded,
    count_subs_composition,
    count_subs_constant,
    count_subs_continuous,
    count_subs_function,
    count_subs_general,
    count_subs_linear,
    count_subs_step,
    multiboolean_cardinality,
)


def test_reference_count_10670():
    spec = PrimarySpec((5, 5, 5, 3, 3, 3, 3, 2, 2, 1, 1, 1, 1))
    assert count_subs_general(spec, 6) == 10670
    assert count_subs_composition(spec, 6) == 10670


def test_edge_counts():
    spec = PrimarySpec((4, 3, 3, 1))
    assert count_subs_general(spec, 0) == 1
    assert count_subs_general(spec, 11) == 1
    assert count_subs_general(spec, 12) == 0
    assert count_subs_general((), 0) == 1
    assert count_subs_general((), 3) == 0
    with pytest.raises(ValueError):
        count_subs_general(spec, -1)
    with pytest.raises(ValueError):
        count_subs_composition(spec, -1)


def test_general_matches_composition_and_brute():
    rng = random.Random(808)
    for _ in range(300):
        spec = random_spec(rng, max_n=6, max_k=6)
        m = rng.randint(0, spec.size + 1)
        want = brute_subs(spec.k, m)
        assert count_subs_general(spec, m) == want
        assert count_subs_composition(spec, m) == want


def test_symmetry_and_total():
    rng = random.Random(909)
    for _ in range(200):
        spec = random_spec(rng, max_n=6, max_k=6)
        m = rng.randint(0, spec.size)
        assert count_subs_general(spec, m) == count_subs_general(spec, spec.size - m)
        total = sum(count_subs_composition(spec, j) for j in range(spec.size + 1))
        assert total == multiboolean_cardinality(spec)


def test_set_and_unrestricted_reductions():
    rng = random.Random(1010)
    for _ in range(200):
        n = rng.randint(0, 9)
        m = rng.randint(0, n + 1)
        assert count_subs_general((1,) * n, m) == math.comb(n, m)
        if n and m:
            assert count_subs_general((m,) * n, m) == math.comb(n + m - 1, m)


def test_function_class():
    assert count_subs_function((1, 3, 5, 7, 9), 4) == 54
    assert count_subs_function((1, 2, 3, 4), 1) == 4
    assert count_subs_function((1, 2, 3, 4), 2) == 9
    g = (2, 7, 20, 54, 148)
    assert count_subs_function(g, 3) == count_subs_composition(PrimarySpec((148, 54, 20, 7, 2)), 3)
    assert count_subs_function(g, 3) == 34


def test_function_class_random():
    rng = random.Random(1111)
    for _ in range(200):
        n = rng.randint(1, 7)
        g = []
        prev = 0
        for i in range(1, n + 1):
            prev = max(prev, i) + rng.randint(0, 3)
            g.append(prev)
        m = rng.randint(0, n)
        assert count_subs_function(g, m) == count_subs_general(g, m)


def test_function_class_errors():
    with pytest.raises(ValueError):
        count_subs_function((1, 2), 3)
    with pytest.raises(ValueError):
        count_subs_function((2, 1), 1)
    with pytest.raises(ValueError):
        count_subs_function((1, 1), 1)
    with pytest.raises(ValueError):
        count_subs_function((1, 2), -1)


def test_continuous_class():
    # f(x) = sqrt(x): least i with f(i) >= j is j*j.
    assert count_subs_continuous(lambda j: j * j, 6, 5) == 48
    assert count_subs_continuous(lambda j: j * j, 6, 2) == 18
    assert count_subs_continuous(lambda j: j * j, 6, 2) == count_subs_general((2, 2, 2, 1, 1, 1), 2)
    # f(x) = x is the all-distinct case.
    assert count_subs_continuous(lambda j: j, 4, 2) == 9
    assert count_subs_continuous(lambda j: j, 4, 2) == count_subs_general((4, 3, 2, 1), 2)
    with pytest.raises(ValueError):
        count_subs_continuous(lambda j: j, 3, 4)


def test_continuous_matches_floor_spec():
    # Multiplicities floor(f(i)) for f(x) = sqrt(6 x): inverse ceil(j*j/6).
    def inv(j):
        return -((-j * j) // 6)

    mult = [math.isqrt(6 * i) for i in range(1, 7)]
    for m in range(0, 7):
        assert count_subs_continuous(inv, 6, m) == count_subs_general(mult, m)


def test_linear_class():
    assert count_subs_linear(2, -1, 5, 4) == 54
    assert count_subs_linear(1, 0, 3, 2) == 5
    assert count_subs_linear(0, 3, 2, 2) == 3
    with pytest.raises(ValueError):
        count_subs_linear(-1, 2, 3, 1)
    with pytest.raises(ValueError):
        count_subs_linear(1, -1, 3, 1)
    with pytest.raises(ValueError):
        count_subs_linear(1, 0, 3, -1)


def test_linear_class_random_all_m():
    rng = random.Random(1212)
    for _ in range(150):
        p = rng.randint(0, 3)
        q = rng.randint(max(1 - p, -p + 1), 4)
        n = rng.randint(0, 6)
        spec = [p * i + q for i in range(1, n + 1)]
        size = sum(spec)
        for m in range(size + 2):
            assert count_subs_linear(p, q, n, m) == count_subs_general(spec, m), (p, q, n, m)


def test_constant_class():
    assert count_subs_constant(1, 5, 2) == 10
    assert count_subs_constant(4, 3, 4) == 15
    assert count_subs_constant(2, 2, 2) == 3
    assert count_subs_constant(3, 0, 0) == 1
    assert count_subs_constant(3, 0, 2) == 0
    with pytest.raises(ValueError):
        count_subs_constant(0, 3, 1)


def test_constant_identity_with_repetition():
    rng = random.Random(1313)
    for _ in range(200):
        n = rng.randint(1, 8)
        m = rng.randint(0, 8)
        q = max(1, m + rng.randint(0, 3))
        assert count_subs_constant(q, n, m) == math.comb(n + m - 1, m)


def test_constant_class_random():
    rng = random.Random(1414)
    for _ in range(150):
        q = rng.randint(1, 6)
        n = rng.randint(0, 5)
        m = rng.randint(0, q * n + 1)
        assert count_subs_constant(q, n, m) == count_subs_general((q,) * n, m)


def test_step_class():
    assert count_subs_step((2, 3, 4, 5), 21) == 492
    assert count_subs_step((1,), 1) == 1
    assert count_subs_step((1,), 2) == 0
    assert count_subs_step((), 0) == 1
    assert count_subs_step((), 1) == 0
    assert count_subs_step((2, 3, 4, 5), 3) == count_subs_composition(
        PrimarySpec((31, 15, 7, 3)), 3
    )
    with pytest.raises(ValueError):
        count_subs_step((3, 2), 1)
    with pytest.raises(ValueError):
        count_subs_step((0, 1), 1)


def test_step_class_random_all_m():
    rng = random.Random(1515)
    for _ in range(60):
        n = rng.randint(1, 4)
        l = sorted(rng.randint(1, 4) for _ in range(n))
        spec = [2 ** v - 1 for v in l]
        size = sum(spec)
        for m in range(size + 2):
            assert count_subs_step(l, m) == count_subs_composition(spec, m), (l, m)


def test_onto_unbounded():
    assert count_onto_unbounded(3, 3) == 1
    assert count_onto_unbounded(3, 5) == 6
    assert count_onto_unbounded(2, 1) == 0
    assert count_onto_unbounded(1, 0) == 0
    with pytest.raises(ValueError):
        count_onto_unbounded(0, 2)
    with pytest.raises(ValueError):
        count_onto_unbounded(2, -1)


def test_onto_unbounded_matches_composition_count():
    # Positive compositions of m into n parts, counted directly.
    def positive_compositions(n, m):
        if n == 0:
            return 1 if m == 0 else 0
        return sum(positive_compositions(n - 1, m - first) for first in range(1, m + 1))

    for n in range(1, 5):
        for m in range(0, 9):
            assert count_onto_unbounded(n, m) == positive_compositions(n, m)
