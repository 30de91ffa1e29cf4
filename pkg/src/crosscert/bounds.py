"""Every named lower/upper bound, as exact evaluators and polynomial builders.

The two crossing-number lower bounds in play are the linear form
5m - (203/9)(n-2) and the cubic form m^3/((687/25) n^2); everything else is
built by instantiating the edge count m of an r-critical graph (minimum
degree, the Gallai bound, or the Kostochka-Stiebitz bound) into a sampled or
probabilistic version of the linear form and comparing against the concentric
drawing upper bound for K_r.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .poly import VAR_ALPHA, VAR_N, BiPoly, UniPoly, uni
from .rational import as_rational

# constants of the two crossing lower bounds
LINEAR_EDGE_FACTOR = Fraction(5)
LINEAR_VERTEX_FACTOR = Fraction(203, 9)
CUBIC_DENOMINATOR = Fraction(687, 25)  # 27.48
CUBIC_EDGE_RATIO = Fraction(139, 20)  # 6.95


def zarankiewicz_upper(r: int) -> Fraction:
    """Crossing count of the two-concentric-circles drawing of K_r.

    floor(r/2) floor((r-1)/2) floor((r-2)/2) floor((r-3)/2) / 4, always an
    integer for r >= 3.
    """
    if r < 3:
        raise DomainError(f"the drawing bound needs r >= 3, got r={r}")
    value = Fraction((r // 2) * ((r - 1) // 2) * ((r - 2) // 2) * ((r - 3) // 2), 4)
    assert value.denominator == 1
    return value


def crossing_lb(n: int, m, variant: str) -> Fraction:
    """Crossing lower bound in terms of vertices and edges.

    ``linear`` needs n >= 3 and returns 5m - (203/9)(n-2); ``cubic`` needs
    m >= 6.95n and returns m^3 / (27.48 n^2).
    """
    m = as_rational(m)
    if variant == "linear":
        if n < 3:
            raise DomainError(f"linear bound needs n >= 3, got n={n}")
        return LINEAR_EDGE_FACTOR * m - LINEAR_VERTEX_FACTOR * (n - 2)
    if variant == "cubic":
        if m < CUBIC_EDGE_RATIO * n:
            raise DomainError(f"cubic bound needs m >= (139/20)n; m={m}, n={n}")
        return m**3 / (CUBIC_DENOMINATOR * n**2)
    raise DomainError(f"unknown crossing bound variant {variant!r}")


class EdgeBoundKind(str, enum.Enum):
    MIN_DEGREE = "mindeg"
    GALLAI = "gallai"
    KOSTOCHKA_STIEBITZ = "ks"


def edge_lower_bound(n: int, r: int, kind: EdgeBoundKind) -> Fraction:
    """Edge-count lower bound for an n-vertex r-critical graph."""
    if kind is EdgeBoundKind.MIN_DEGREE:
        if not 1 <= r <= n:
            raise DomainError(f"minimum-degree bound needs n >= r >= 1, got n={n}, r={r}")
        return Fraction(n * (r - 1), 2)
    if kind is EdgeBoundKind.GALLAI:
        if r < 4 or not (r + 2 <= n <= 2 * r - 1):
            raise DomainError(
                f"the dense-range bound needs r >= 4 and r+2 <= n <= 2r-1, got n={n}, r={r}"
            )
        return Fraction((r - 1) * n + (n - r) * (2 * r - n) - 2, 2)
    if kind is EdgeBoundKind.KOSTOCHKA_STIEBITZ:
        # valid for n != 2r-1, and at n = 2r-1 under the no-K_r-subdivision
        # assumption; the certifier tags intervals that rely on the latter
        if r < 4 or n < r:
            raise DomainError(f"this bound needs n >= r >= 4, got n={n}, r={r}")
        return Fraction(n * (r - 1), 2) + (r - 3)
    raise DomainError(f"unknown edge bound kind {kind!r}")


def edge_count_poly(r: int, kind: EdgeBoundKind) -> UniPoly:
    """The edge bound as an exact polynomial in n (for fixed r)."""
    if kind is EdgeBoundKind.MIN_DEGREE:
        return uni(VAR_N, 0, Fraction(r - 1, 2))
    if kind is EdgeBoundKind.GALLAI:
        # ((r-1)n + (n-r)(2r-n) - 2)/2 = (-n^2 + (4r-1)n - 2r^2 - 2)/2
        return uni(VAR_N, Fraction(-2 * r * r - 2, 2), Fraction(4 * r - 1, 2), Fraction(-1, 2))
    if kind is EdgeBoundKind.KOSTOCHKA_STIEBITZ:
        return uni(VAR_N, r - 3, Fraction(r - 1, 2))
    raise DomainError(f"unknown edge bound kind {kind!r}")


def sampling_lb(n: int, m, k: int) -> Fraction:
    """Lower bound from averaging the linear bound over all k-vertex subgraphs.

    5m (n-2)(n-3) / ((k-2)(k-3)) - 203 n(n-1)(n-2)(n-3) / (9k(k-1)(k-3));
    reduces to the plain linear bound at k = n.
    """
    if not 4 <= k <= n:
        raise DomainError(f"sampling needs 4 <= k <= n, got k={k}, n={n}")
    m = as_rational(m)
    first = 5 * m * Fraction((n - 2) * (n - 3), (k - 2) * (k - 3))
    second = Fraction(203 * n * (n - 1) * (n - 2) * (n - 3), 9 * k * (k - 1) * (k - 3))
    return first - second


def prob_lb(n: int, m, p) -> Fraction:
    """Lower bound from keeping each vertex independently with probability p.

    5m/p^2 - 203n/(9p^3) + 406/(9p^4) - 1/2, valid for 1/2 <= p <= 1 only.
    """
    p = as_rational(p)
    if not Fraction(1, 2) <= p <= 1:
        raise DomainError(f"vertex-sampling bound needs 1/2 <= p <= 1, got p={p}")
    m = as_rational(m)
    return 5 * m / p**2 - Fraction(203, 9) * n / p**3 + Fraction(406, 9) / p**4 - Fraction(1, 2)


def immersion_deficit(n: int, r: int) -> Fraction:
    """Crossings lost when rerouting a weak immersion of K_r into a subdivision."""
    if n < r or r < 1:
        raise DomainError(f"deficit needs n >= r >= 1, got n={n}, r={r}")
    return Fraction(n * (n - r) * (n + 2 * r), 8)


def w_edge_average(n: int, r: int) -> Fraction:
    """Average number of edges induced on the (n-r)-vertex leftover part.

    (r-1)(n-r)(n-r-1) / (2(n-1)); some partition attains at least this.
    """
    if not n > r >= 2:
        raise DomainError(f"averaging needs n > r >= 2, got n={n}, r={r}")
    return Fraction((r - 1) * (n - r) * (n - r - 1), 2 * (n - 1))


def chromatic_bound_from_cr(c) -> int:
    """Least u with (u-1)^4 >= 256 c, by exact integer fourth-power search."""
    c = as_rational(c)
    if c < 0:
        raise DomainError(f"crossing count cannot be negative, got {c}")
    target_num = 256 * c.numerator
    den = c.denominator
    # initial guess from integer square roots, then exact adjustment
    v = math.isqrt(math.isqrt(max(target_num // den, 0)))
    while v**4 * den < target_num:
        v += 1
    while v > 0 and (v - 1) ** 4 * den >= target_num:
        v -= 1
    return v + 1


# -- bound specifications ------------------------------------------------------


@dataclass(frozen=True)
class SamplingBound:
    k: int
    edge: EdgeBoundKind

    def __post_init__(self):
        if self.k < 4:
            raise DomainError(f"subgraph size must be at least 4, got k={self.k}")


@dataclass(frozen=True)
class ProbBound:
    p: Fraction
    edge: EdgeBoundKind

    def __post_init__(self):
        object.__setattr__(self, "p", as_rational(self.p))
        if not Fraction(1, 2) <= self.p <= 1:
            raise DomainError(f"probability must lie in [1/2, 1], got p={self.p}")


@dataclass(frozen=True)
class SubdivisionWindow:
    """Orders n <= r+4, excluded because such graphs contain a K_r subdivision."""


@dataclass(frozen=True)
class Thm4Window:
    """Orders in [1.228r, 1.768r], excluded by the certified alpha-window argument."""


BoundSpec = SamplingBound | ProbBound | SubdivisionWindow | Thm4Window


def bound_poly_in_n(r: int, spec: BoundSpec) -> UniPoly:
    """Margin polynomial in n: crossing lower bound minus the K_r drawing bound.

    Nonnegative values of this polynomial are the orders the bound excludes.
    For sampling specs it is a quartic with negative leading coefficient; for
    probability specs it is linear in n.
    """
    target = zarankiewicz_upper(r)
    if isinstance(spec, SamplingBound):
        k = spec.k
        m = edge_count_poly(r, spec.edge)
        shifted = uni(VAR_N, 6, -5, 1)  # (n-2)(n-3)
        full = uni(VAR_N, 0, -6, 11, -6, 1)  # n(n-1)(n-2)(n-3)
        first = m * shifted * Fraction(5, (k - 2) * (k - 3))
        second = full * Fraction(203, 9 * k * (k - 1) * (k - 3))
        return first - second - uni(VAR_N, target)
    if isinstance(spec, ProbBound):
        p = spec.p
        m = edge_count_poly(r, spec.edge)
        poly = m * (5 / p**2) - uni(VAR_N, 0, Fraction(203, 9) / p**3)
        constant = Fraction(406, 9) / p**4 - Fraction(1, 2) - target
        return poly + uni(VAR_N, constant)
    raise DomainError(f"no margin polynomial for spec {spec!r}")


# -- symbolic builders for the alpha-window analysis ---------------------------


def sampling_gap_bipoly(k: int, *, edge_constant: bool = True) -> BiPoly:
    """100 x (Gallai-edge sampled lower bound minus the drawing bound), in (r, alpha).

    This is the margin whose nonnegativity excludes orders n = alpha r; the
    substitution n := alpha r is already applied.  With ``edge_constant=False``
    the "-2" inside the Gallai edge count is dropped; that variant is the one
    whose coefficient groups the quoted expansions list, and it differs from
    the strict margin by exactly 500 (n-2)(n-3) / ((k-2)(k-3)).
    """
    if k < 4:
        raise DomainError(f"subgraph size must be at least 4, got k={k}")
    r = BiPoly.var_r()
    a = BiPoly.var_alpha()
    one = BiPoly.constant(1)
    n = a * r
    edges2 = (r - one) * n + (n - r) * (2 * r - n)  # twice the edge bound
    if edge_constant:
        edges2 = edges2 - BiPoly.constant(2)
    q = (n - 2 * one) * (n - 3 * one)
    sampled = edges2 * q * Fraction(5, 2 * (k - 2) * (k - 3))
    whole = n * (n - one) * (n - 2 * one) * (n - 3 * one) * Fraction(203, 9 * k * (k - 1) * (k - 3))
    drawing = r * (r - one) * (r - 2 * one) * (r - 3 * one) * Fraction(1, 64)
    return (sampled - whole - drawing) * 100


def gallai_window_quartic(k: int) -> UniPoly:
    """Leading (r^4) profile of the sampled Gallai margin, as a quartic in alpha.

    (5/2)(alpha + (alpha-1)(2-alpha)) alpha^2 / ((k-2)(k-3))
    - (203/9) alpha^4 / (k(k-1)(k-3)) - 1/64; the feasible oval of the
    two-parameter contour plot is exactly its nonnegativity region.
    """
    if k < 4:
        raise DomainError(f"subgraph size must be at least 4, got k={k}")
    s = Fraction(5, 2 * (k - 2) * (k - 3))
    return uni(
        VAR_ALPHA,
        Fraction(-1, 64),
        0,
        -2 * s,
        4 * s,
        -s - Fraction(203, 9 * k * (k - 1) * (k - 3)),
    )


def min_degree_window_quartic(k: int) -> UniPoly:
    """Quartic in alpha controlling the minimum-degree sampled margin.

    alpha^3/(2(k-3)) (5/(k-2) - 406 alpha/(9k(k-1))) - 1/64, used with
    k = 36 and k = 40 on the high-alpha windows.
    """
    if k < 4:
        raise DomainError(f"subgraph size must be at least 4, got k={k}")
    return uni(
        VAR_ALPHA,
        Fraction(-1, 64),
        0,
        0,
        Fraction(5, 2 * (k - 3) * (k - 2)),
        Fraction(-406, 18 * k * (k - 1) * (k - 3)),
    )


def sampling_error_minorant(k: int) -> UniPoly:
    """Linear lower bound for the normalized error term of the sampled margin.

    Only the two instances actually used are provided:
    k=40: 15/38 - (406/(9*40*39)) (19 alpha - 17)/14, nonnegative up to 3.5;
    k=36: 15/34 - (406/(9*36*35)) (59 alpha - 17)/14, nonnegative up to ~3.21.
    """
    if k == 40:
        factor = Fraction(406, 9 * 40 * 39)
        return uni(VAR_ALPHA, Fraction(15, 38) + factor * Fraction(17, 14), -factor * Fraction(19, 14))
    if k == 36:
        factor = Fraction(406, 9 * 36 * 35)
        return uni(VAR_ALPHA, Fraction(15, 34) + factor * Fraction(17, 14), -factor * Fraction(59, 14))
    raise DomainError(f"no error minorant tabulated for k={k}")
