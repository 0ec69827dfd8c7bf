"""Enumeration of constrained secondary specifications.

The counting formulas sum over the solutions of

    w_1*lam_1 + w_2*lam_2 + ... + w_s*lam_s = m

with non-negative lam_i.  For the general submultiset and permutation
formulas the weights are 1..s with s = min(m, r) and the bounds are nested
suffix sums (lam_j + ... + lam_s <= kbar_j); the step-class formula reuses
the same engine with weights 2^{i-1} and independent per-component caps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import AdjointSpec


@dataclass(frozen=True)
class LambdaSolution:
    """One feasible vector lam_1..lam_s with its weighted total m."""

    lam: tuple[int, ...]
    weighted_total: int

    def __iter__(self):
        return iter(self.lam)

    def __len__(self) -> int:
        return len(self.lam)


def enumerate_lambda_weighted(
    m: int,
    weights: Sequence[int],
    caps: Sequence[int] | None = None,
    nested: bool = False,
) -> Iterator[LambdaSolution]:
    """Yield solutions of sum(w_i * lam_i) = m lazily, no duplicates.

    caps bounds the solutions: with nested=True, cap_j limits the suffix
    sum lam_j + ... + lam_s; otherwise each cap_j limits lam_j alone.
    Deterministic order: recursion from the last index down to the first,
    trying larger lam values first.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    w = tuple(weights)
    for a, b in zip(w, w[1:]):
        if a >= b:
            raise ValueError("weights must be strictly increasing")
    if w and w[0] < 1:
        raise ValueError("weights must be positive")
    c = None if caps is None else tuple(caps)
    if c is not None and len(c) != len(w):
        raise ValueError("caps length must match weights length")

    def rec(idx: int, remaining: int, used: int) -> Iterator[tuple[int, ...]]:
        if idx < 0:
            if remaining == 0:
                yield ()
            return
        hi = remaining // w[idx]
        if c is not None:
            bound = c[idx] - used if nested else c[idx]
            if bound < 0:
                return
            hi = min(hi, bound)
        for v in range(hi, -1, -1):
            for tail in rec(idx - 1, remaining - w[idx] * v, used + v if nested else 0):
                yield tail + (v,)

    for lam in rec(len(w) - 1, m, 0):
        yield LambdaSolution(lam=lam, weighted_total=m)


def enumerate_lambda(m: int, kbar) -> Iterator[LambdaSolution]:
    """Solutions of sum(i * lam_i) = m, i = 1..s, under suffix bounds.

    s = min(m, r) where r = len(kbar); every suffix sum lam_j + ... + lam_s
    stays within kbar_j.  For m = 0 the single empty solution is yielded.
    """
    kb = tuple(kbar.kbar) if isinstance(kbar, AdjointSpec) else tuple(kbar)
    s = min(m, len(kb))
    return enumerate_lambda_weighted(m, range(1, s + 1), caps=kb[:s], nested=True)


def count_lambda_unconstrained(m: int, weights: Sequence[int]) -> int:
    """Number of non-negative solutions of sum(w_i * lam_i) = m, no bounds."""
    if m < 0:
        raise ValueError("m must be non-negative")
    dp = [0] * (m + 1)
    dp[0] = 1
    for w in weights:
        for v in range(w, m + 1):
            dp[v] += dp[v - w]
    return dp[m]
