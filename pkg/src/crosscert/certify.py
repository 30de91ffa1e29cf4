"""Machine-checkable sign certificates on closed rational intervals.

A certificate pins a claimed sign for a polynomial on [lo, hi] to (a) exact
endpoint values and (b) an exact count of distinct interior roots of the
squarefree part.  Strict claims require zero interior roots; non-strict claims
tolerate sign-touching roots, which are verified by evaluating at exact
rational points on both sides of every isolated root.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ContiguityError, DomainError
from .intervals import ClosedRatInterval, IntInterval
from .poly import VAR_N, UniPoly
from .rational import rat_str
from .sturm import isolate_roots, squarefree_part, sturm_root_count


class Claim(str, enum.Enum):
    STRICT_POS = "strictly-positive"
    NONNEG = "nonnegative"
    STRICT_NEG = "strictly-negative"
    NONPOS = "nonpositive"

    @property
    def strict(self) -> bool:
        return self in (Claim.STRICT_POS, Claim.STRICT_NEG)

    @property
    def upward(self) -> bool:
        """True for claims asserting values above zero."""
        return self in (Claim.STRICT_POS, Claim.NONNEG)

    def holds_at(self, value: Fraction) -> bool:
        if self is Claim.STRICT_POS:
            return value > 0
        if self is Claim.NONNEG:
            return value >= 0
        if self is Claim.STRICT_NEG:
            return value < 0
        return value <= 0


@dataclass(frozen=True)
class SignCertificate:
    poly: UniPoly
    interval: ClosedRatInterval
    claim: Claim
    interior_root_count: int
    endpoint_values: tuple[Fraction, Fraction]
    squarefree_witness: UniPoly


@dataclass(frozen=True)
class Refutation:
    poly: UniPoly
    interval: ClosedRatInterval
    claim: Claim
    witness: Fraction
    value: Fraction

    def __str__(self) -> str:
        return (
            f"claim '{self.claim.value}' fails at {rat_str(self.witness)}: "
            f"value {rat_str(self.value)}"
        )


CertifyResult = SignCertificate | Refutation


def _exact_root_side_points(
    root: Fraction, left_bound: Fraction, right_bound: Fraction
) -> tuple[Fraction, Fraction]:
    """Rational points straddling an exactly-known root, root-free by construction."""
    return (left_bound + root) / 2, (root + right_bound) / 2


def _touch_points(
    p: UniPoly,
    brackets: list[tuple[Fraction, Fraction]],
    lo: Fraction,
    hi: Fraction,
) -> list[Fraction]:
    """One exact non-root test point on each side of every isolated interior root.

    Each bracket (a, b] holds exactly one distinct root.  ``a`` may coincide
    with a neighbouring root and ``b`` may be the root itself; both cases are
    resolved with midpoints of root-free gaps.
    """
    points: list[Fraction] = []
    for idx, (a, b) in enumerate(brackets):
        next_boundary = brackets[idx + 1][0] if idx + 1 < len(brackets) else hi
        if p(b) == 0:
            # the bracket's unique root is exactly b
            left, right = _exact_root_side_points(b, a, next_boundary)
        else:
            left, right = a, b
            while p(left) == 0 or p(right) == 0:
                mid = (left + right) / 2
                if p(mid) == 0:
                    left, right = _exact_root_side_points(mid, left, right)
                    break
                # keep the sub-bracket containing the root
                count = sturm_root_count(p, ClosedRatInterval(left, mid)).count
                if count == 1:
                    right = mid
                else:
                    left = mid
        if p(left) != 0:
            points.append(left)
        if p(right) != 0:
            points.append(right)
    return points


def certify_sign(p: UniPoly, interval: ClosedRatInterval, claim: Claim) -> CertifyResult:
    """Certify or refute a sign claim for p on a closed bounded interval.

    A refutation carries an exact rational point where the claim fails; it is
    a result, not an exception.
    """
    if p.is_zero:
        raise DomainError("cannot certify the zero polynomial")
    if interval.hi is None:
        raise DomainError("sign certification needs a bounded interval")
    if not interval.lo < interval.hi:
        raise DomainError(f"degenerate interval {interval}")
    lo, hi = interval.lo, interval.hi
    v_lo, v_hi = p(lo), p(hi)
    for point, value in ((lo, v_lo), (hi, v_hi)):
        if not claim.holds_at(value):
            return Refutation(p, interval, claim, point, value)

    sf = squarefree_part(p)
    rc = sturm_root_count(p, interval)
    interior = rc.count - (1 if rc.root_at_hi else 0)

    if claim.strict:
        # strict endpoint checks already exclude endpoint roots
        if interior > 0:
            witness = _strict_witness(p, interval, claim)
            return Refutation(p, interval, claim, witness, p(witness))
        return SignCertificate(p, interval, claim, 0, (v_lo, v_hi), sf)

    if interior == 0:
        # sign is constant strictly inside; make sure it matches the claim
        probe = None
        if v_lo != 0:
            probe = lo
        elif v_hi != 0:
            probe = hi
        else:
            probe = (lo + hi) / 2
        value = p(probe)
        if value != 0 and not claim.holds_at(value):
            return Refutation(p, interval, claim, probe, value)
        return SignCertificate(p, interval, claim, 0, (v_lo, v_hi), sf)

    brackets = [
        (a, b)
        for (a, b) in isolate_roots(p, interval)
        if not (b == hi and p(hi) == 0)  # the root at hi is an endpoint, not interior
    ]
    for point in _touch_points(p, brackets, lo, hi):
        if not claim.holds_at(p(point)):
            return Refutation(p, interval, claim, point, p(point))
    return SignCertificate(p, interval, claim, interior, (v_lo, v_hi), sf)


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return out


def _small_rational_roots(p: UniPoly, limit: int = 10**7) -> list[Fraction]:
    """Exact rational roots via the rational-root theorem.

    Gives up (returns what it has) when the cleared-denominator coefficients
    are too large to enumerate divisors cheaply; callers treat the list as
    best-effort.
    """
    sf = squarefree_part(p)
    denom = 1
    for c in sf.coeffs:
        denom = math.lcm(denom, c.denominator)
    ints = [int(c * denom) for c in sf.coeffs]
    roots: list[Fraction] = []
    while ints and ints[0] == 0:
        ints = ints[1:]
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
    if not ints or len(ints) == 1:
        return roots
    low, lead = abs(ints[0]), abs(ints[-1])
    if low > limit or lead > limit:
        return roots
    for num in _divisors(low):
        for den in _divisors(lead):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand not in roots and sf(cand) == 0:
                    roots.append(cand)
    return roots


def _strict_witness(p: UniPoly, interval: ClosedRatInterval, claim: Claim) -> Fraction:
    """A rational point violating a strict claim known to fail inside the interval."""
    brackets = isolate_roots(p, interval)
    for a, b in brackets:
        if p(b) == 0:
            return b
        left, right = a, b
        for _ in range(48):
            mid = (left + right) / 2
            if p(mid) == 0 or not claim.holds_at(p(mid)):
                return mid
            if sturm_root_count(p, ClosedRatInterval(left, mid)).count == 1:
                right = mid
            else:
                left = mid
        # the root touches without crossing, so the claim fails exactly at the
        # root; recover it when it is rational
        for root in _small_rational_roots(p):
            if a < root <= b:
                return root
        raise DomainError(
            f"strict claim fails only at an irrational touching root inside "
            f"({rat_str(a)}, {rat_str(b)}]; no rational witness exists"
        )
    raise DomainError("no refuting root found; certificate should have been issued")


def verify_certificate(cert: SignCertificate) -> bool:
    """Independent recheck of a certificate's validity conditions."""
    p, interval, claim = cert.poly, cert.interval, cert.claim
    v_lo, v_hi = p(interval.lo), p(interval.hi)
    if (v_lo, v_hi) != cert.endpoint_values:
        return False
    if not (claim.holds_at(v_lo) and claim.holds_at(v_hi)):
        return False
    rc = sturm_root_count(p, interval)
    interior = rc.count - (1 if rc.root_at_hi else 0)
    if interior != cert.interior_root_count:
        return False
    if claim.strict:
        return interior == 0
    if interior == 0:
        probe = interval.lo if v_lo != 0 else (interval.hi if v_hi != 0 else (interval.lo + interval.hi) / 2)
        value = p(probe)
        return value == 0 or claim.holds_at(value)
    brackets = [
        (a, b)
        for (a, b) in isolate_roots(p, interval)
        if not (b == interval.hi and p(interval.hi) == 0)
    ]
    return all(claim.holds_at(p(t)) for t in _touch_points(p, brackets, interval.lo, interval.hi))


def integer_feasible_set(p: UniPoly, bracket: IntInterval) -> IntInterval:
    """Maximal contiguous integers n with p(n) >= 0, searched inside ``bracket``.

    Exact evaluation decides every membership; p(n) = 0 counts as feasible.
    An unbounded bracket is accepted only for a non-decreasing linear bound
    (positive slope), where the threshold is solved exactly.  Inside a finite
    bracket the feasible set must be contiguous and must not lean on a bracket
    edge with a feasible outward neighbour; otherwise a structured error
    reports the defect.
    """
    if p.var != VAR_N:
        raise DomainError("integer feasibility is defined for polynomials in n")
    if bracket.empty:
        raise DomainError("empty search bracket")
    lo = bracket.lo
    assert lo is not None

    if bracket.hi is None:
        if p.is_zero:
            return IntInterval(lo=lo, hi=None)
        if p.degree == 0:
            return IntInterval(lo=lo, hi=None) if p.coeff(0) >= 0 else IntInterval.make_empty()
        if p.degree == 1 and p.leading > 0:
            threshold = -p.coeff(0) / p.coeff(1)
            n0 = math.ceil(threshold)
            if p(n0 - 1) >= 0 or p(n0) < 0:
                raise DomainError("threshold arithmetic failed its own witness check")
            return IntInterval(lo=n0, hi=None)
        raise DomainError(
            "an unbounded bracket needs a linear bound with positive leading coefficient"
        )

    feasible = [n for n in range(lo, bracket.hi + 1) if p(n) >= 0]
    if not feasible:
        return IntInterval.make_empty()
    runs: list[list[int]] = [[feasible[0], feasible[0]]]
    for n in feasible[1:]:
        if n == runs[-1][1] + 1:
            runs[-1][1] = n
        else:
            runs.append([n, n])
    if len(runs) > 1:
        gap = list(range(runs[0][1] + 1, runs[1][0]))
        raise ContiguityError(
            f"feasible set splits inside [{lo},{bracket.hi}]: "
            f"runs {[tuple(r) for r in runs]} with gap {gap}",
            gap,
        )
    a, b = runs[0]
    if a == lo and p(lo - 1) >= 0:
        raise DomainError(
            f"feasible set reaches the bracket's lower end {lo}; enlarge the bracket"
        )
    if b == bracket.hi and p(b + 1) >= 0:
        raise DomainError(
            f"feasible set reaches the bracket's upper end {b}; enlarge the bracket"
        )
    return IntInterval(lo=a, hi=b)
