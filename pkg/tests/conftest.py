"""Shared test helpers: independent reference implementations and generators.

Everything here is deliberately naive (product scans, row-building), so the
library under test never validates itself against its own code paths.
"""

import itertools
import math

from multicomb import PrimarySpec


def transpose_partition(k):
    """Conjugate of a partition by explicit row-over-column marking."""
    k = tuple(k)
    if not k:
        return ()
    cols = [0] * max(k)
    for v in k:
        for i in range(v):
            cols[i] += 1
    return tuple(cols)


def brute_subs(k, m):
    """Bounded compositions of m counted by full product scan."""
    return sum(
        1 for vec in itertools.product(*(range(v + 1) for v in k)) if sum(vec) == m
    )


def brute_perms(k, m):
    """Distinct m-arrangements counted as multinomials over the same scan."""
    total = 0
    for vec in itertools.product(*(range(v + 1) for v in k)):
        if sum(vec) == m:
            coeff = math.factorial(m)
            for v in vec:
                coeff //= math.factorial(v)
            total += coeff
    return total


def lambda_solutions_filter(m, weights, caps=None, nested=False):
    """Weighted-solution set by filtering the full product range."""
    weights = tuple(weights)
    ranges = [range(m // w + 1) for w in weights]
    out = set()
    for vec in itertools.product(*ranges):
        if sum(w * v for w, v in zip(weights, vec)) != m:
            continue
        if caps is not None:
            if nested:
                if any(sum(vec[j:]) > caps[j] for j in range(len(vec))):
                    continue
            elif any(v > c for v, c in zip(vec, caps)):
                continue
        out.add(vec)
    return out


def random_spec(rng, max_n=8, max_k=8, min_n=0):
    n = rng.randint(min_n, max_n)
    return PrimarySpec.from_multiplicities(rng.randint(1, max_k) for _ in range(n))
