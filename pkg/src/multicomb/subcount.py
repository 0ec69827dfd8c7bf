"""Counting m-submultisets.

All routes return the same exact integer: the general lambda-sum formula,
a bounded-composition DP, and closed forms for the special multiset classes
(function-generated, continuous, linear, constant, step), plus the count of
unbounded samples covering the whole base.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Sequence

from .core import Tally, as_primary_spec, adjoint_spec, binom, multinomial
from .lambdas import enumerate_lambda, enumerate_lambda_weighted


def _lambda_sum(m: int, kbar: Sequence[int], tally: Tally | None = None) -> int:
    # Sum over nested-bounded solutions of the product of falling binomials.
    total = 0
    nsol = 0
    ops = 0
    for sol in enumerate_lambda(m, kbar):
        nsol += 1
        prod = 1
        suffix = 0
        for j in range(len(sol.lam), 0, -1):
            prod *= binom(kbar[j - 1] - suffix, sol.lam[j - 1])
            suffix += sol.lam[j - 1]
            ops += 1
        total += prod
    if tally is not None:
        tally.solutions += nsol
        tally.ops += ops + nsol
    return total


def _unconstrained_class_sum(m: int, kb: Sequence[int], tally: Tally | None = None) -> int:
    # Class formulas sum over all solutions of lam_1 + 2*lam_2 + ... + m*lam_m = m;
    # kb[j-1] plays the role of the adjoint entry, and may be negative (the
    # binomial convention then kills the infeasible solutions).
    total = 0
    nsol = 0
    ops = 0
    for sol in enumerate_lambda_weighted(m, range(1, m + 1)):
        nsol += 1
        prod = 1
        suffix = 0
        for j in range(len(sol.lam), 0, -1):
            prod *= binom(kb[j - 1] - suffix, sol.lam[j - 1])
            suffix += sol.lam[j - 1]
            ops += 1
            if prod == 0:
                break
        total += prod
    if tally is not None:
        tally.solutions += nsol
        tally.ops += ops + nsol
    return total


def count_subs_general(spec, m: int, *, tally: Tally | None = None) -> int:
    """Number of m-submultisets by the general lambda-sum formula.

    Sums, over the feasible secondary specs of size m, the product of
    binomials binom(kbar_j - later-lambda-count, lam_j).  The symmetric
    count is used when m is past the midpoint: C_m = C_{|A|-m}.
    """
    spec = as_primary_spec(spec)
    if m < 0:
        raise ValueError("m must be non-negative")
    size = spec.size
    if m > size:
        return 0
    m = min(m, size - m)
    return _lambda_sum(m, adjoint_spec(spec).kbar, tally)


def count_subs_composition(spec, m: int, *, tally: Tally | None = None) -> int:
    """Number of bounded compositions: sequences r_i with sum m, 0 <= r_i <= k_i.

    One DP pass per element with a direct window sum of width k_i + 1;
    independent of both the formula path and the triangle DP, so it doubles
    as a mid-scale oracle.
    """
    spec = as_primary_spec(spec)
    if m < 0:
        raise ValueError("m must be non-negative")
    counts = [1] + [0] * m
    ops = 0
    for k in spec:
        counts = [
            sum(counts[t] for t in range(max(0, j - k), j + 1)) for j in range(m + 1)
        ]
        ops += sum(min(j, k) + 1 for j in range(m + 1))
    if tally is not None:
        tally.ops += ops
    return counts[m]


def count_subs_function(g_values: Sequence[int], m: int, *, tally: Tally | None = None) -> int:
    """Count for a multiset whose i-th multiplicity is g(i), g nondecreasing, g(i) >= i.

    Requires m <= n.  Uses kb_j = n - g_inverse(j) + 1 with
    g_inverse(j) = min{i : g(i) >= j} found by scanning the tabulated values.
    """
    g = tuple(g_values)
    n = len(g)
    if m < 0:
        raise ValueError("m must be non-negative")
    if m > n:
        raise ValueError("function-class count requires m <= n")
    for i, v in enumerate(g, 1):
        if v < i:
            raise ValueError(f"g({i}) = {v} violates g(i) >= i")
    for a, b in zip(g, g[1:]):
        if a > b:
            raise ValueError("g must be nondecreasing")

    def g_inverse(j: int) -> int:
        for i, v in enumerate(g, 1):
            if v >= j:
                return i
        raise ValueError(f"g never reaches {j}")

    kb = [n - g_inverse(j) + 1 for j in range(1, m + 1)]
    return _unconstrained_class_sum(m, kb, tally)


def count_subs_continuous(
    f_inverse_min: Callable[[int], int], n: int, m: int, *, tally: Tally | None = None
) -> int:
    """Count for multiplicities floor(f(i)) with f continuous increasing, f(x) >= x.

    The caller supplies the exact integer inverse: f_inverse_min(j) must be
    the least integer i with f(i) >= j.  Requires m <= n.  Evaluates the
    class formula with kb_j = n - max(1, f_inverse_min(j)) + 1.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    if m > n:
        raise ValueError("continuous-class count requires m <= n")
    kb = [n - max(1, f_inverse_min(j)) + 1 for j in range(1, m + 1)]
    return _unconstrained_class_sum(m, kb, tally)


def count_subs_linear(p: int, q: int, n: int, m: int, *, tally: Tally | None = None) -> int:
    """Count for the linear class: i-th multiplicity p*i + q.

    Requires p >= 0 and p + q >= 1.  p = 0 delegates to the constant class.
    For p >= 1 the adjoint entries follow the exact-rational formula
    kb_j = floor(n - max(1, (j - q)/p)) + 1; the sum runs unconstrained when
    m <= n and over the suffix-bounded solution set when m > n.
    """
    if p < 0:
        raise ValueError("p must be non-negative")
    if p + q < 1:
        raise ValueError("linear class requires p + q >= 1")
    if m < 0:
        raise ValueError("m must be non-negative")
    if n < 0:
        raise ValueError("n must be non-negative")
    if p == 0:
        return count_subs_constant(q, n, m, tally=tally)
    if n == 0:
        return 1 if m == 0 else 0

    r = p * n + q
    s = min(m, r)
    kb = [
        math.floor(n - max(Fraction(1), Fraction(j - q, p))) + 1 for j in range(1, s + 1)
    ]
    if m <= n:
        return _unconstrained_class_sum(m, kb, tally)

    size = sum(p * i + q for i in range(1, n + 1))
    if m > size:
        return 0
    total = 0
    nsol = 0
    ops = 0
    for sol in enumerate_lambda_weighted(m, range(1, s + 1), caps=kb, nested=True):
        nsol += 1
        prod = 1
        suffix = 0
        for j in range(len(sol.lam), 0, -1):
            prod *= binom(kb[j - 1] - suffix, sol.lam[j - 1])
            suffix += sol.lam[j - 1]
            ops += 1
        total += prod
    if tally is not None:
        tally.solutions += nsol
        tally.ops += ops + nsol
    return total


def count_subs_constant(q: int, n: int, m: int, *, tally: Tally | None = None) -> int:
    """Count when every multiplicity equals q, by two multinomial routes.

    Route one sums multinomials over suffix-bounded solutions with weights
    1..min(m, q); route two sums the same multinomials over unconstrained
    solutions, carrying the slack variable lam_0 = n - sum(lam) explicitly.
    Both are evaluated and must agree.
    """
    if q < 1:
        raise ValueError("q must be a positive integer")
    if n < 0:
        raise ValueError("n must be non-negative")
    if m < 0:
        raise ValueError("m must be non-negative")
    s = min(m, q)

    bounded = 0
    for sol in enumerate_lambda_weighted(m, range(1, s + 1), caps=(n,) * s, nested=True):
        bounded += multinomial(n, sol.lam)

    free = 0
    for sol in enumerate_lambda_weighted(m, range(1, s + 1)):
        if sum(sol.lam) > n:
            continue
        free += multinomial(n, sol.lam)

    if bounded != free:
        raise RuntimeError(
            f"constant-class routes disagree: {bounded} != {free} (q={q}, n={n}, m={m})"
        )
    if tally is not None:
        tally.ops += 1
    return bounded


def count_subs_step(l_values: Sequence[int], m: int, *, tally: Tally | None = None) -> int:
    """Count for multiplicities 2^{l_i} - 1 with l nondecreasing, l_i >= 1.

    Binary-digit weights: sums over solutions of
    lam_1 + 2*lam_2 + 4*lam_3 + ... = m with each lam_i capped independently
    by the adjoint entry at position 2^{i-1}, the product of binom(cap, lam_i).
    """
    l = tuple(l_values)
    if m < 0:
        raise ValueError("m must be non-negative")
    for v in l:
        if not isinstance(v, int) or v < 1:
            raise ValueError("l entries must be positive integers")
    for a, b in zip(l, l[1:]):
        if a > b:
            raise ValueError("l must be nondecreasing")
    if not l:
        return 1 if m == 0 else 0

    spec = as_primary_spec([2 ** v - 1 for v in l])
    kbar = adjoint_spec(spec).kbar
    depth = l[-1]
    weights = [2 ** i for i in range(depth)]
    caps = [kbar[2 ** i - 1] for i in range(depth)]

    total = 0
    nsol = 0
    for sol in enumerate_lambda_weighted(m, weights, caps=caps, nested=False):
        nsol += 1
        prod = 1
        for cap, v in zip(caps, sol.lam):
            prod *= binom(cap, v)
        total += prod
    if tally is not None:
        tally.solutions += nsol
        tally.ops += nsol * (depth + 1)
    return total


def count_onto_unbounded(n: int, m: int) -> int:
    """m-samples from n unbounded elements that cover every element.

    The generating series gives binom(m - 1, n - 1) for m >= n, else 0.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if m < 0:
        raise ValueError("m must be non-negative")
    if m < n:
        return 0
    return binom(m - 1, n - 1)
