"""Brute-force ground truth by explicit enumeration.

Walks every bounded composition (r_1..r_n) of m in lexicographic order.
Slow on purpose and kept independent of the formula machinery: no adjoint
specs, no lambda solutions.  A state budget aborts runaway enumerations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import Tally, as_primary_spec, multinomial


@dataclass(frozen=True)
class EnumBudget:
    max_states: int = 10 ** 6

    def __post_init__(self) -> None:
        if self.max_states < 1:
            raise ValueError("max_states must be positive")


class BudgetExceededError(RuntimeError):
    """Enumeration would visit more states than the budget allows."""


def enumerate_submultisets(spec, m: int, budget: EnumBudget | None = None,
                           *, tally: Tally | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every vector (r_1..r_n) with 0 <= r_i <= k_i and sum m.

    Lexicographic order, no duplicates.  The budget counts emitted vectors
    plus visited partial states; exceeding it raises BudgetExceededError.
    """
    spec = as_primary_spec(spec)
    if m < 0:
        raise ValueError("m must be non-negative")
    if budget is None:
        budget = EnumBudget()
    k = spec.k
    n = len(k)
    remaining_capacity = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        remaining_capacity[i] = remaining_capacity[i + 1] + k[i]

    states = 0

    def walk(i: int, rem: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
        nonlocal states
        states += 1
        if states > budget.max_states:
            raise BudgetExceededError(
                f"enumeration exceeded {budget.max_states} states"
            )
        if tally is not None:
            tally.ops += 1
        if i == n:
            if rem == 0:
                yield tuple(prefix)
            return
        lo = max(0, rem - remaining_capacity[i + 1])
        hi = min(k[i], rem)
        for v in range(lo, hi + 1):
            prefix.append(v)
            yield from walk(i + 1, rem - v, prefix)
            prefix.pop()

    if m > remaining_capacity[0]:
        return
    yield from walk(0, m, [])


def count_subs_brute(spec, m: int, budget: EnumBudget | None = None,
                     *, tally: Tally | None = None) -> int:
    """Number of m-submultisets by direct enumeration."""
    return sum(1 for _ in enumerate_submultisets(spec, m, budget, tally=tally))


def count_perms_brute(spec, m: int, budget: EnumBudget | None = None,
                      *, tally: Tally | None = None) -> int:
    """Number of m-permutations by direct enumeration.

    Each m-submultiset contributes its arrangement count m!/prod(r_i!);
    the ordered tuples themselves are never materialized.
    """
    total = 0
    for vec in enumerate_submultisets(spec, m, budget, tally=tally):
        total += multinomial(m, vec)
    return total
