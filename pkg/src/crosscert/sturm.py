"""Real-root counting and isolation via exact Sturm sequences.

The number of distinct real roots of a squarefree p in (a, b] equals
V(a) - V(b), where V(x) counts sign changes along the signed-remainder chain
p, p', -rem(p, p'), ...  All arithmetic is exact, so the counts are proofs,
not estimates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .intervals import ClosedRatInterval
from .poly import UniPoly
from .rational import as_rational


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm."""
    while not b.is_zero:
        _, rem = a.divmod(b)
        a, b = b, rem
    if a.is_zero:
        return a
    return a.monic()


def squarefree_part(p: UniPoly) -> UniPoly:
    """p divided by gcd(p, p'): same roots, all simple."""
    if p.is_zero:
        raise DomainError("zero polynomial has no squarefree part")
    if p.degree == 0:
        return p
    g = poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return p
    quotient, rem = p.divmod(g)
    assert rem.is_zero, "gcd must divide the polynomial exactly"
    return quotient


def sturm_chain(p: UniPoly) -> list[UniPoly]:
    """Signed-remainder chain of the squarefree part of p."""
    p0 = squarefree_part(p)
    chain = [p0]
    if p0.degree >= 1:
        chain.append(p0.derivative())
        while chain[-1].degree >= 1:
            _, rem = chain[-2].divmod(chain[-1])
            if rem.is_zero:
                break
            chain.append(-rem)
    return chain


def _sign_changes(values: list[Fraction]) -> int:
    nonzero = [v for v in values if v != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if (a > 0) != (b > 0))


def _variations_at(chain: list[UniPoly], x: Fraction) -> int:
    return _sign_changes([q(x) for q in chain])


def _variations_at_pos_inf(chain: list[UniPoly]) -> int:
    return _sign_changes([q.leading for q in chain if not q.is_zero])


@dataclass(frozen=True)
class RootCount:
    """Distinct real roots of the squarefree part in (lo, hi], with endpoint flags."""

    count: int
    root_at_lo: bool
    root_at_hi: bool

    @property
    def interior(self) -> int:
        """Distinct roots strictly between the endpoints."""
        return self.count - (1 if self.root_at_hi else 0)


def sturm_root_count(p: UniPoly, interval: ClosedRatInterval) -> RootCount:
    """Exact count of distinct real roots of p in (interval.lo, interval.hi].

    An unbounded interval counts roots in (lo, +oo); ``root_at_hi`` is then
    False by convention.
    """
    if p.is_zero:
        raise DomainError("root counting is undefined for the zero polynomial")
    chain = sturm_chain(p)
    sf = chain[0]
    lo = interval.lo
    v_lo = _variations_at(chain, lo)
    if interval.hi is None:
        v_hi = _variations_at_pos_inf(chain)
        root_at_hi = False
    else:
        v_hi = _variations_at(chain, interval.hi)
        root_at_hi = sf(interval.hi) == 0
    return RootCount(
        count=v_lo - v_hi,
        root_at_lo=sf(lo) == 0,
        root_at_hi=root_at_hi,
    )


def isolate_roots(p: UniPoly, interval: ClosedRatInterval) -> list[tuple[Fraction, Fraction]]:
    """Disjoint rational intervals (a, b], each holding exactly one distinct root.

    Bisection on the Sturm count; requires a bounded interval.
    """
    if interval.hi is None:
        raise DomainError("root isolation needs a bounded interval")
    chain = sturm_chain(p)

    def count_between(a: Fraction, b: Fraction) -> int:
        return _variations_at(chain, a) - _variations_at(chain, b)

    out: list[tuple[Fraction, Fraction]] = []

    def split(a: Fraction, b: Fraction, k: int) -> None:
        if k == 0:
            return
        if k == 1:
            out.append((a, b))
            return
        mid = (a + b) / 2
        left = count_between(a, mid)
        split(a, mid, left)
        split(mid, b, k - left)

    total = count_between(interval.lo, interval.hi)
    split(as_rational(interval.lo), as_rational(interval.hi), total)
    return sorted(out)


def refine_to_width(
    p: UniPoly, bracket: tuple[Fraction, Fraction], width: Fraction
) -> tuple[Fraction, Fraction]:
    """Shrink an isolating (a, b] bracket until b - a <= width."""
    chain = sturm_chain(p)

    def count_between(a: Fraction, b: Fraction) -> int:
        return _variations_at(chain, a) - _variations_at(chain, b)

    a, b = bracket
    while b - a > width:
        mid = (a + b) / 2
        if count_between(a, mid) == 1:
            b = mid
        else:
            a = mid
    return a, b
