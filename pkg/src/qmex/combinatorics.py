"""Overpartition enumeration and the four minimal-excludant statistics.

Everything here is brute force on purpose: it is the oracle that the
generating-function builders are checked against.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .series import Series


class StatKind(enum.Enum):
    OMEX = "omex"
    OMOEX = "omoex"
    TILDE_OMEX = "tilde_omex"
    TILDE_OMOEX = "tilde_omoex"

    @property
    def odd(self) -> bool:
        return self in (StatKind.OMOEX, StatKind.TILDE_OMOEX)


@dataclass(frozen=True)
class Overpartition:
    """Parts in non-increasing order plus the set of overlined part values.

    Only the first occurrence of a value may be overlined, so the overline
    is a property of the value.
    """

    parts: tuple = ()
    overlined: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        over = frozenset(int(v) for v in self.overlined)
        missing = over - set(parts)
        if missing:
            raise ValueError(f"overlined values {sorted(missing)} are not parts")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "overlined", over)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def all_odd(self) -> bool:
        return all(p & 1 for p in self.parts)

    def multiplicity(self, v: int) -> int:
        return self.parts.count(v)

    def __str__(self) -> str:
        out = []
        seen = set()
        for p in self.parts:
            if p in self.overlined and p not in seen:
                out.append(f"{p}~")
            else:
                out.append(str(p))
            seen.add(p)
        return "+".join(out)

    @classmethod
    def parse(cls, text: str) -> "Overpartition":
        """Inverse of ``str``: ``"5~+4~+4+2+1"``; the empty string is empty."""
        text = text.strip()
        if not text:
            return cls()
        parts, over = [], set()
        for tok in text.split("+"):
            tok = tok.strip()
            if tok.endswith("~"):
                v = int(tok[:-1])
                if v in over:
                    raise ValueError(f"value {v} overlined twice in {text!r}")
                over.add(v)
            else:
                v = int(tok)
            parts.append(v)
        return cls(tuple(parts), frozenset(over))


def partitions(n: int, odd_only: bool = False, max_part: int | None = None) -> Iterator[tuple]:
    """Partitions of ``n`` as non-increasing tuples, descending-lexicographic."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    top = min(n, max_part)
    for p in range(top, 0, -1):
        if odd_only and not p & 1:
            continue
        for rest in partitions(n - p, odd_only, p):
            yield (p,) + rest


def enumerate_overpartitions(n: int, odd_only: bool = False) -> Iterator[Overpartition]:
    """Every overpartition of ``n`` exactly once.

    Order: partitions descending-lexicographic; within a partition, overline
    subsets by ascending bitmask where bit i marks the i-th largest distinct
    value.
    """
    if n < 0:
        raise ValueError(f"weight must be non-negative, got {n}")
    for parts in partitions(n, odd_only):
        distinct = sorted(set(parts), reverse=True)
        for mask in range(1 << len(distinct)):
            over = frozenset(v for i, v in enumerate(distinct) if mask >> i & 1)
            yield Overpartition(parts, over)


def _require_odd(p: Overpartition) -> None:
    if not p.all_odd:
        raise ValueError(f"overpartition {p} has an even part")


def omex(p: Overpartition) -> int:
    """Smallest positive integer that is not a part, overlined or not."""
    present = set(p.parts)
    k = 1
    while k in present:
        k += 1
    return k


def omoex(p: Overpartition) -> int:
    _require_odd(p)
    present = set(p.parts)
    k = 1
    while k in present:
        k += 2
    return k


def tilde_omex(p: Overpartition) -> int:
    """k such that k~ is the smallest overlined value missing from ``p``."""
    k = 1
    while k in p.overlined:
        k += 1
    return k


def tilde_omoex(p: Overpartition) -> int:
    _require_odd(p)
    k = 1
    while k in p.overlined:
        k += 2
    return k


STATISTICS = {
    StatKind.OMEX: omex,
    StatKind.OMOEX: omoex,
    StatKind.TILDE_OMEX: tilde_omex,
    StatKind.TILDE_OMOEX: tilde_omoex,
}


def statistic(p: Overpartition, kind: StatKind) -> int:
    return STATISTICS[kind](p)


def satisfies_restriction(p: Overpartition, kind: StatKind) -> bool:
    """Membership in the class counted by the restricted counting function."""
    k = statistic(p, kind)
    step = 2 if kind.odd else 1
    if kind in (StatKind.OMEX, StatKind.OMOEX):
        return all(v >= k for v in p.overlined)
    # under 1 < 1~ < 2 < 2~ < ..., every part below k~ must occur: j and j~
    # for each j < k in range, and a non-overlined k
    counts = Counter(p.parts)
    if counts[k] < 1:
        return False
    return all(counts[j] >= 2 for j in range(1, k, step))


@lru_cache(maxsize=None)
def _restricted_tally(n: int, kind: StatKind) -> tuple:
    tally = Counter()
    for p in enumerate_overpartitions(n, odd_only=kind.odd):
        if satisfies_restriction(p, kind):
            tally[statistic(p, kind)] += 1
    return tuple(sorted(tally.items()))


def count_restricted(n: int, kind: StatKind) -> int:
    return sum(c for _, c in _restricted_tally(n, kind))


def mex_distribution(n: int, kind: StatKind) -> dict:
    """Restricted overpartitions of ``n`` grouped by statistic.

    For OMOEX the key is the index m with ``omoex = 2m - 1``.
    """
    if kind is StatKind.OMEX:
        return dict(_restricted_tally(n, kind))
    if kind is StatKind.OMOEX:
        return {(v + 1) // 2: c for v, c in _restricted_tally(n, kind)}
    raise ValueError(f"distribution is defined for OMEX and OMOEX only, not {kind.value}")


def sigma_omex(n: int) -> int:
    return sum(m * c for m, c in mex_distribution(n, StatKind.OMEX).items())


def sigma_omoex_index(n: int) -> int:
    return sum(m * c for m, c in mex_distribution(n, StatKind.OMOEX).items())


def sigma_omex_unrestricted(n: int) -> int:
    """Sum of omex over all overpartitions of ``n`` (exploration only)."""
    return sum(omex(p) for p in enumerate_overpartitions(n))


def sigma_omoex_unrestricted(n: int) -> int:
    return sum(omoex(p) for p in enumerate_overpartitions(n, odd_only=True))


def f_signed_count(n: int) -> int:
    """Odd-part partitions of ``n`` whose odd values below the largest part
    all occur: (#largest = 3 mod 4) - (#largest = 1 mod 4)."""
    if n < 1:
        raise ValueError(f"weight must be positive, got {n}")
    total = 0
    for parts in partitions(n, odd_only=True):
        top = parts[0]
        if set(range(1, top + 1, 2)) <= set(parts):
            total += 1 if top % 4 == 3 else -1
    return total


def count_overpartitions(n: int, odd_only: bool = False) -> int:
    return sum(1 for _ in enumerate_overpartitions(n, odd_only))


# -- enumeration-derived series ----------------------------------------------

def _series_from(fn, order: int, start: int = 0) -> Series:
    return Series([0] * start + [fn(n) for n in range(start, order + 1)])


def restricted_count_series(kind: StatKind, order: int) -> Series:
    return _series_from(lambda n: count_restricted(n, kind), order)


def overpartition_count_series(order: int, odd_only: bool = False) -> Series:
    return _series_from(lambda n: count_overpartitions(n, odd_only), order)


def sigma_omex_series(order: int) -> Series:
    return _series_from(sigma_omex, order)


def sigma_omoex_index_series(order: int) -> Series:
    return _series_from(sigma_omoex_index, order)


def f_signed_series(order: int) -> Series:
    return _series_from(f_signed_count, order, start=1) if order >= 1 else Series([0])
