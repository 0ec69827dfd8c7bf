"""Multisets and their specifications.

A finite multiset {a_1^k_1, ..., a_n^k_n} is described by three integer
vectors derived from its multiplicities:

* primary spec: the multiplicities themselves, sorted non-increasing;
* secondary spec: lambda_i = how many multiplicities equal i;
* adjoint spec: kbar_i = how many multiplicities are >= i (the conjugate
  partition of the primary spec).

Every counting routine in this package consumes these vectors.  This module
also holds the shared exact-arithmetic helpers (binomial with the cutoff
convention, multinomial) and the operation tally used by the bench harness.
"""

from __future__ import annotations

import math
import re
import warnings
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

UNBOUNDED = math.inf

Multiplicity = Union[int, float]

_LABEL_RE = re.compile(r"^\w+$")


class Tally:
    """Mutable operation counter threaded through counting routines by bench.

    Not part of any counting contract; results never depend on it.
    """

    __slots__ = ("ops", "solutions")

    def __init__(self) -> None:
        self.ops = 0
        self.solutions = 0

    def __repr__(self) -> str:
        return f"Tally(ops={self.ops}, solutions={self.solutions})"


def binom(a: int, b: int) -> int:
    """Binomial coefficient under the cutoff convention used everywhere here.

    Returns 0 for b < 0 and for b > a with b >= 1; returns 1 for b == 0
    no matter what a is.  The b == 0 case is checked before the a < b
    cutoff: zero-lambda factors with a negative upper argument must
    collapse to 1 in the class formulas.
    """
    if b < 0:
        return 0
    if b == 0:
        return 1
    if a < b:
        return 0
    return math.comb(a, b)


def multinomial(total: int, parts: Sequence[int]) -> int:
    """total! / (parts_1! * ... * parts_s! * (total - sum(parts))!)."""
    rest = total - sum(parts)
    if rest < 0:
        raise ValueError("parts sum exceeds total")
    out = math.factorial(total)
    for p in parts:
        if p < 0:
            raise ValueError("negative part")
        if p > 1:
            out //= math.factorial(p)
    if rest > 1:
        out //= math.factorial(rest)
    return out


class Multiset:
    """Labeled elements with positive (or unbounded) multiplicities.

    Entries are canonicalized at construction: zero multiplicities are
    stripped, unbounded entries sort first, the rest sort by non-increasing
    multiplicity with ties broken by label.
    """

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[tuple[str, Multiplicity]]) -> None:
        kept = []
        seen = set()
        for label, mult in entries:
            if not isinstance(label, str) or not _LABEL_RE.match(label):
                raise ValueError(f"invalid label {label!r}")
            if label in seen:
                raise ValueError(f"duplicate label {label!r}")
            seen.add(label)
            if mult == UNBOUNDED:
                kept.append((label, UNBOUNDED))
                continue
            if not isinstance(mult, int) or isinstance(mult, bool):
                raise ValueError(f"multiplicity of {label!r} must be a positive integer or inf")
            if mult < 0:
                raise ValueError(f"negative multiplicity for {label!r}")
            if mult == 0:
                continue
            kept.append((label, mult))
        kept.sort(key=_entry_key)
        self.entries: tuple[tuple[str, Multiplicity], ...] = tuple(kept)

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.entries)

    @property
    def multiplicities(self) -> tuple[Multiplicity, ...]:
        return tuple(mult for _, mult in self.entries)

    @property
    def has_unbounded(self) -> bool:
        return any(mult == UNBOUNDED for _, mult in self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multiset):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        inner = ",".join(
            label if mult == 1 else f"{label}^{'inf' if mult == UNBOUNDED else mult}"
            for label, mult in self.entries
        )
        return f"Multiset({inner!r})"


def _entry_key(entry: tuple[str, Multiplicity]) -> tuple[int, int, str]:
    label, mult = entry
    if mult == UNBOUNDED:
        return (0, 0, label)
    return (1, -mult, label)


@dataclass(frozen=True)
class PrimarySpec:
    """Non-increasing sequence of positive multiplicities."""

    k: tuple[int, ...]

    def __post_init__(self) -> None:
        for v in self.k:
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ValueError(f"multiplicity {v!r} is not a positive integer")
        for a, b in zip(self.k, self.k[1:]):
            if a < b:
                raise ValueError("primary spec must be non-increasing")

    @classmethod
    def from_multiplicities(cls, values: Iterable[int]) -> "PrimarySpec":
        return cls(tuple(sorted(values, reverse=True)))

    @property
    def n(self) -> int:
        """Base cardinality (number of distinct elements)."""
        return len(self.k)

    @property
    def size(self) -> int:
        """Multiset cardinality |A| = sum of multiplicities."""
        return sum(self.k)

    @property
    def r(self) -> int:
        """Largest multiplicity (0 for the empty multiset)."""
        return self.k[0] if self.k else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.k)

    def __len__(self) -> int:
        return len(self.k)

    def __getitem__(self, i):
        return self.k[i]


@dataclass(frozen=True)
class SecondarySpec:
    """lam[i-1] counts multiplicities equal to i; total = sum(i * lam_i)."""

    lam: tuple[int, ...]
    total: int

    def __iter__(self) -> Iterator[int]:
        return iter(self.lam)

    def __len__(self) -> int:
        return len(self.lam)

    def __getitem__(self, i):
        return self.lam[i]


@dataclass(frozen=True)
class AdjointSpec:
    """kbar[i-1] counts multiplicities >= i; the conjugate partition."""

    kbar: tuple[int, ...]

    def __post_init__(self) -> None:
        for a, b in zip(self.kbar, self.kbar[1:]):
            if a < b:
                raise ValueError("adjoint spec must be non-increasing")
        if any(v < 1 for v in self.kbar):
            raise ValueError("adjoint entries must be positive")

    def __iter__(self) -> Iterator[int]:
        return iter(self.kbar)

    def __len__(self) -> int:
        return len(self.kbar)

    def __getitem__(self, i):
        return self.kbar[i]


def as_primary_spec(spec) -> PrimarySpec:
    """Coerce a PrimarySpec or a bare multiplicity sequence (any order)."""
    if isinstance(spec, PrimarySpec):
        return spec
    return PrimarySpec.from_multiplicities(spec)


def parse_multiset(text: str) -> Multiset:
    """Parse a multiset expression.

    Grammar: comma-separated items, item = LABEL ['^' MULT] with MULT a
    positive decimal or `inf` (omitted means 1).  A bare comma-separated
    list of integers is read as a primary spec with synthesized labels
    e1..en.  Zero multiplicities are stripped with a warning.
    """
    items = [part.strip() for part in text.split(",")] if text.strip() else []
    if any(item == "" for item in items):
        raise ValueError("empty item in multiset expression")

    if items and all(re.fullmatch(r"\d+|inf", item) for item in items):
        entries = []
        for idx, item in enumerate(items, 1):
            mult = UNBOUNDED if item == "inf" else int(item)
            entries.append((f"e{idx}", mult))
        return _strip_zeros_with_warning(entries)

    entries = []
    for item in items:
        label, sep, mult_text = item.partition("^")
        label = label.strip()
        if not _LABEL_RE.match(label) or re.fullmatch(r"\d+", label):
            raise ValueError(f"invalid label {label!r}")
        if not sep:
            mult: Multiplicity = 1
        else:
            mult_text = mult_text.strip()
            if mult_text == "inf":
                mult = UNBOUNDED
            elif re.fullmatch(r"\d+", mult_text):
                mult = int(mult_text)
            else:
                raise ValueError(
                    f"multiplicity {mult_text!r} for {label!r} must be a positive integer or inf"
                )
        entries.append((label, mult))
    return _strip_zeros_with_warning(entries)


def _strip_zeros_with_warning(entries: list[tuple[str, Multiplicity]]) -> Multiset:
    dropped = [label for label, mult in entries if mult == 0]
    if dropped:
        warnings.warn(f"zero-multiplicity entries stripped: {', '.join(dropped)}")
    seen = set()
    for label, _ in entries:
        if label in seen:
            raise ValueError(f"duplicate label {label!r}")
        seen.add(label)
    return Multiset(entries)


def primary_spec(ms: Multiset, clamp_at: int | None = None) -> PrimarySpec:
    """Multiplicity sequence of ms, non-increasing.

    Unbounded entries are replaced by clamp_at, which is legitimate for any
    m-count with clamp_at >= m: an m-selection uses at most m copies of one
    element.  clamp_at = 0 drops unbounded entries entirely.
    """
    if ms.has_unbounded:
        if clamp_at is None:
            raise ValueError("multiset has unbounded entries; a clamp value is required")
        if not isinstance(clamp_at, int) or clamp_at < 0:
            raise ValueError("clamp value must be a non-negative integer")
    values = []
    for _, mult in ms.entries:
        if mult == UNBOUNDED:
            if clamp_at:
                values.append(clamp_at)
        else:
            values.append(mult)
    return PrimarySpec.from_multiplicities(values)


def secondary_spec(spec) -> SecondarySpec:
    """Tally of multiplicities by value: lam_i = |{j : k_j = i}|, i = 1..r."""
    spec = as_primary_spec(spec)
    r = spec.r
    lam = [0] * r
    for v in spec:
        lam[v - 1] += 1
    return SecondarySpec(lam=tuple(lam), total=spec.size)


def adjoint_spec(spec) -> AdjointSpec:
    """Conjugate of the primary spec: kbar_i = |{j : k_j >= i}|, i = 1..r."""
    spec = as_primary_spec(spec)
    return AdjointSpec(kbar=tuple(
        sum(1 for v in spec if v >= i) for i in range(1, spec.r + 1)
    ))


def is_self_adjoint(spec) -> bool:
    spec = as_primary_spec(spec)
    return adjoint_spec(spec).kbar == spec.k


M = "M"
M_INVERSE = "M_inverse"


def spec_transform(v: Sequence[int], direction: str) -> tuple[int, ...]:
    """Apply the summation matrix M or its inverse to a spec vector.

    M takes suffix sums (output_i = v_i + v_{i+1} + ... + v_n); M_inverse
    takes first differences (output_i = v_i - v_{i+1}, reading v_{n+1} = 0).
    """
    v = tuple(v)
    if direction == M:
        out = []
        run = 0
        for x in reversed(v):
            run += x
            out.append(run)
        return tuple(reversed(out))
    if direction == M_INVERSE:
        return tuple(
            x - (v[i + 1] if i + 1 < len(v) else 0) for i, x in enumerate(v)
        )
    raise ValueError(f"unknown transform direction {direction!r}")


def _conjugate_by_transpose(k: tuple[int, ...]) -> tuple[int, ...]:
    # Independent route: mark Young-diagram columns row by row.
    if not k:
        return ()
    cols = [0] * k[0]
    for v in k:
        for i in range(v):
            cols[i] += 1
    return tuple(cols)


def check_spec_identities(spec) -> dict[str, bool]:
    """Evaluate the twelve specification identities on one spec.

    The first flag checks the conjugate definition against an independent
    Young-diagram transpose; the remaining eleven are the printed
    relationships among k, lambda, kbar, and lambar (the secondary spec of
    the conjugate).  All must hold for every valid spec.
    """
    spec = as_primary_spec(spec)
    k = spec.k
    n = spec.n
    r = spec.r
    lam = secondary_spec(spec).lam
    kbar = adjoint_spec(spec).kbar
    lambar = secondary_spec(kbar).lam if k else ()
    # lambar has n components: the largest adjoint entry is kbar_1 = n.

    lam_suffix = spec_transform(lam, M)
    lambar_suffix = spec_transform(lambar, M)

    return {
        "conjugate_transpose": kbar == _conjugate_by_transpose(k),
        "primary_from_secondary_suffixes": k == tuple(
            sum(1 for s in lam_suffix if s >= i) for i in range(1, n + 1)
        ),
        "conjugate_secondary_counts": lambar == tuple(
            sum(1 for v in kbar if v == i) for i in range(1, n + 1)
        ),
        "conjugate_from_its_secondary_suffixes": kbar == tuple(
            sum(1 for s in lambar_suffix if s >= i) for i in range(1, r + 1)
        ),
        "secondary_counts": lam == tuple(
            sum(1 for v in k if v == i) for i in range(1, r + 1)
        ),
        "primary_from_conjugate_counts": k == tuple(
            sum(1 for v in kbar if v >= i) for i in range(1, n + 1)
        ),
        "conjugate_secondary_from_suffix_sums": lambar == tuple(
            sum(1 for s in lam_suffix if s == i) for i in range(1, n + 1)
        ),
        "secondary_from_conjugate_suffix_sums": lam == tuple(
            sum(1 for s in lambar_suffix if s == i) for i in range(1, r + 1)
        ),
        "sum_conjugate_secondary_is_primary": spec_transform(lambar, M) == k,
        "diff_primary_is_conjugate_secondary": spec_transform(k, M_INVERSE) == lambar,
        "sum_secondary_is_conjugate": spec_transform(lam, M) == kbar,
        "diff_conjugate_is_secondary": spec_transform(kbar, M_INVERSE) == lam,
    }


def multiboolean_cardinality(spec) -> int:
    """Number of submultisets of all sizes: product of (k_i + 1)."""
    spec = as_primary_spec(spec)
    out = 1
    for v in spec:
        out *= v + 1
    return out
