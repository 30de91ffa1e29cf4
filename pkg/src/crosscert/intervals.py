"""Closed rational intervals and contiguous integer intervals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .rational import as_rational, rat_str


@dataclass(frozen=True)
class ClosedRatInterval:
    """[lo, hi] with exact rational endpoints; ``hi=None`` means unbounded above."""

    lo: Fraction
    hi: Fraction | None

    def __post_init__(self):
        object.__setattr__(self, "lo", as_rational(self.lo))
        if self.hi is not None:
            object.__setattr__(self, "hi", as_rational(self.hi))
            if self.lo > self.hi:
                raise DomainError(f"interval endpoints out of order: {self}")

    @property
    def unbounded(self) -> bool:
        return self.hi is None

    def contains(self, x) -> bool:
        x = as_rational(x)
        return self.lo <= x and (self.hi is None or x <= self.hi)

    def __str__(self) -> str:
        hi = "oo" if self.hi is None else rat_str(self.hi)
        return f"[{rat_str(self.lo)},{hi}]"


def union_covers(pieces: list[ClosedRatInterval], target: ClosedRatInterval) -> bool:
    """Exact check that the union of closed pieces contains the closed target.

    Pieces are sorted by lower end; the union covers the target iff, sweeping
    from target.lo, each piece extends the covered prefix with no gap.
    """
    pieces = sorted(pieces, key=lambda iv: iv.lo)
    covered_to = target.lo
    covered_unbounded = False
    for piece in pieces:
        if piece.lo > covered_to:
            break  # gap before this piece
        if piece.hi is None:
            covered_unbounded = True
            break
        if piece.hi > covered_to:
            covered_to = piece.hi
    if covered_unbounded:
        return True
    if target.hi is None:
        return False
    return covered_to >= target.hi


@dataclass(frozen=True)
class IntInterval:
    """A contiguous set of integers; ``hi=None`` means unbounded above."""

    lo: int | None = None
    hi: int | None = None
    empty: bool = False

    def __post_init__(self):
        if self.empty:
            object.__setattr__(self, "lo", None)
            object.__setattr__(self, "hi", None)
            return
        if self.lo is None:
            raise DomainError("non-empty IntInterval needs a lower end")
        if self.hi is not None and self.lo > self.hi:
            raise DomainError(f"integer interval endpoints out of order: [{self.lo},{self.hi}]")

    @classmethod
    def make_empty(cls) -> "IntInterval":
        return cls(empty=True)

    @property
    def unbounded(self) -> bool:
        return not self.empty and self.hi is None

    def contains(self, n: int) -> bool:
        if self.empty:
            return False
        return self.lo <= n and (self.hi is None or n <= self.hi)

    def __str__(self) -> str:
        if self.empty:
            return "[]"
        if self.hi is None:
            return f"[{self.lo},oo)"
        return f"[{self.lo},{self.hi}]"


def integer_gaps(start: int, intervals: list[IntInterval]) -> set[int]:
    """Integers >= start covered by no interval; finite only if one interval is unbounded."""
    unbounded = [iv for iv in intervals if iv.unbounded]
    if not unbounded:
        raise DomainError("coverage needs an interval unbounded above")
    horizon = min(iv.lo for iv in unbounded)
    gaps = set()
    for n in range(start, horizon):
        if not any(iv.contains(n) for iv in intervals):
            gaps.add(n)
    return gaps
