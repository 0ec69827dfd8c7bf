"""Counting m-permutations: ordered m-samples respecting multiplicities.

Three routes: the full-length multinomial, the lambda-sum formula (the
submultiset product weighted by arrangement multinomials), and a column
recurrence that folds one element at a time through binomial convolutions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import PrimarySpec, Tally, as_primary_spec, adjoint_spec, binom
from .lambdas import enumerate_lambda


def count_perms_full(spec) -> int:
    """Permutations of the whole multiset: (sum k_i)! / product(k_i!)."""
    spec = as_primary_spec(spec)
    out = math.factorial(spec.size)
    for k in spec:
        out //= math.factorial(k)
    return out


def count_perms_general(spec, m: int, *, tally: Tally | None = None) -> int:
    """Number of m-permutations by the lambda-sum formula.

    Each feasible secondary spec contributes m! / product((i!)^lam_i)
    arrangements times the submultiset product of binomials.
    """
    spec = as_primary_spec(spec)
    if m < 0:
        raise ValueError("m must be non-negative")
    if m > spec.size:
        return 0
    kbar = adjoint_spec(spec).kbar
    m_fact = math.factorial(m)
    total = 0
    nsol = 0
    ops = 0
    for sol in enumerate_lambda(m, kbar):
        nsol += 1
        coeff = m_fact
        for i, li in enumerate(sol.lam, 1):
            if li and i > 1:
                coeff //= math.factorial(i) ** li
        prod = coeff
        suffix = 0
        for j in range(len(sol.lam), 0, -1):
            prod *= binom(kbar[j - 1] - suffix, sol.lam[j - 1])
            suffix += sol.lam[j - 1]
            ops += 1
        total += prod
    if tally is not None:
        tally.solutions += nsol
        tally.ops += ops + 2 * nsol
    return total


def perm_col_next(prev, k_r: int):
    """Fold one more element of multiplicity k_r into a permutation column.

    new[i] = sum over j in [max(0, i - k_r), min(i, S)] of binom(i, j) * prev[j]
    where S = len(prev) - 1 is the cardinality covered so far; the output has
    S + k_r + 1 entries.
    """
    if k_r < 1:
        raise ValueError("multiplicity must be positive")
    prev = tuple(prev)
    s_prev = len(prev) - 1
    out = []
    for i in range(s_prev + k_r + 1):
        acc = 0
        for j in range(max(0, i - k_r), min(i, s_prev) + 1):
            acc += math.comb(i, j) * prev[j]
        out.append(acc)
    return tuple(out)


@dataclass(frozen=True)
class PermTable:
    """Permutation columns, one per spec prefix; columns[r-1] covers k_1..k_r."""

    spec: PrimarySpec
    columns: tuple[tuple[int, ...], ...]

    @property
    def final_column(self) -> tuple[int, ...]:
        """Counts P_0..P_{|A|}."""
        return self.columns[-1] if self.columns else (1,)


def build_perm_table(spec) -> PermTable:
    spec = as_primary_spec(spec)
    col = (1,)
    columns = []
    for k in spec:
        col = perm_col_next(col, k)
        columns.append(col)
    return PermTable(spec=spec, columns=tuple(columns))


def count_perms_dp(spec, m: int, *, tally: Tally | None = None) -> int:
    """Column entry m after folding the whole spec, truncating above m.

    Entry i of a new column only reads entries <= i of the previous one,
    so columns never need to grow past m + 1.
    """
    spec = as_primary_spec(spec)
    if m < 0:
        raise ValueError("m must be non-negative")
    if m > spec.size:
        return 0
    col = [1]
    ops = 0
    for k in spec:
        s_prev = len(col) - 1
        width = min(s_prev + k + 1, m + 1)
        out = []
        for i in range(width):
            acc = 0
            for j in range(max(0, i - k), min(i, s_prev) + 1):
                acc += math.comb(i, j) * col[j]
                ops += 1
            out.append(acc)
        col = out
    if tally is not None:
        tally.ops += ops
    return col[m]
