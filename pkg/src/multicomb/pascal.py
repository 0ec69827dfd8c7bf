"""Generalized Pascal-triangle DP for all submultiset counts at once.

Each element of multiplicity k turns row A into row B by summing windows
of k+1 consecutive entries: B(j) = A(j-k) + ... + A(j).  After folding the
whole spec, entry m of the final row is the m-submultiset count.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import PrimarySpec, Tally, as_primary_spec


def subs_row_next(prev, k_next: int):
    """Next triangle row, by the running-sum form of the window recurrence.

    B(j) = B(j-1) + A(j) - A(j-k_next-1) with out-of-range entries read as
    zero; output length is len(prev) + k_next.
    """
    if k_next < 1:
        raise ValueError("multiplicity must be positive")
    prev = tuple(prev)
    out = []
    run = 0
    for j in range(len(prev) + k_next):
        if j < len(prev):
            run += prev[j]
        drop = j - k_next - 1
        if 0 <= drop < len(prev):
            run -= prev[drop]
        out.append(run)
    return tuple(out)


def _subs_row_next_windowed(prev, k_next: int):
    # Direct window-sum form; kept as the cross-check for the running sum.
    prev = tuple(prev)
    return tuple(
        sum(prev[q] for q in range(max(0, j - k_next), min(j, len(prev) - 1) + 1))
        for j in range(len(prev) + k_next)
    )


@dataclass(frozen=True)
class SubsTable:
    """Triangle rows for one spec; row l covers the first l elements."""

    spec: PrimarySpec
    rows: tuple[tuple[int, ...], ...]

    @property
    def final_row(self) -> tuple[int, ...]:
        """Counts C_0..C_{|A|}."""
        return self.rows[-1]


def build_subs_table(spec, keep_all_rows: bool = False) -> SubsTable:
    """Fold the whole spec; keep every intermediate row only on request.

    The final row always holds C_0..C_{|A|}; for the empty spec that row
    is just (1,).
    """
    spec = as_primary_spec(spec)
    row = (1,)
    rows = []
    for k in spec:
        row = subs_row_next(row, k)
        if keep_all_rows:
            rows.append(row)
    if not keep_all_rows or not rows:
        rows = [row]
    return SubsTable(spec=spec, rows=tuple(rows))


def count_subs_dp(spec, m: int, *, tally: Tally | None = None) -> int:
    """Final-row entry min(m, |A|-m), with rows truncated at that width.

    Truncation is sound because entry j of a new row only reads entries
    <= j of the previous row; the row symmetry supplies the other half.
    """
    spec = as_primary_spec(spec)
    if m < 0:
        raise ValueError("m must be non-negative")
    size = spec.size
    if m > size:
        return 0
    m_eff = min(m, size - m)
    row = [1]
    ops = 0
    for k in spec:
        width = min(len(row) + k, m_eff + 1)
        out = []
        run = 0
        for j in range(width):
            if j < len(row):
                run += row[j]
            drop = j - k - 1
            if 0 <= drop < len(row):
                run -= row[drop]
            out.append(run)
        ops += width
        row = out
    if tally is not None:
        tally.ops += ops
    return row[m_eff]
