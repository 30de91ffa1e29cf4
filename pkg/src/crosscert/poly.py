"""Exact polynomials in one variable (n or alpha) and two variables (r, alpha).

These carry every inequality in the engine.  Coefficients are Fractions, all
operations are exact, and values are immutable after construction.  Degrees in
practice stay at or below 8, so dense tuples (univariate) and a sparse term
map (bivariate) are plenty.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, VariableMismatchError
from .rational import as_rational, rat_str

VAR_N = "n"
VAR_ALPHA = "alpha"
_VARS = (VAR_N, VAR_ALPHA)


def _trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    last = len(coeffs)
    while last > 0 and coeffs[last - 1] == 0:
        last -= 1
    return tuple(coeffs[:last])


class UniPoly:
    """Dense exact polynomial in a single tagged variable."""

    __slots__ = ("var", "coeffs")

    def __init__(self, var: str, coeffs: Iterable[Fraction | int | str]):
        if var not in _VARS:
            raise VariableMismatchError(f"unknown variable tag {var!r}")
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "coeffs", _trim([as_rational(c) for c in coeffs]))

    def __setattr__(self, name, value):  # immutable after construction
        raise AttributeError("UniPoly is immutable")

    # -- basic structure ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UniPoly)
            and self.var == other.var
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.var, self.coeffs))

    def __repr__(self) -> str:
        return f"UniPoly({self.var!r}, {list(self.coeffs)!r})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeff(i)
            if c == 0:
                continue
            mag = rat_str(abs(c))
            if i == 0:
                term = mag
            else:
                var = self.var if i == 1 else f"{self.var}^{i}"
                term = var if abs(c) == 1 else f"{mag}*{var}"
            parts.append(("-" if c < 0 else "+", term))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out

    # -- arithmetic ----------------------------------------------------------

    def _check_var(self, other: "UniPoly") -> None:
        if self.var != other.var:
            raise VariableMismatchError(
                f"cannot combine polynomials in {self.var!r} and {other.var!r}"
            )

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._check_var(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.var, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        self._check_var(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.var, [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self) -> "UniPoly":
        return UniPoly(self.var, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            self._check_var(other)
            if self.is_zero or other.is_zero:
                return UniPoly(self.var, [])
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return UniPoly(self.var, out)
        scalar = as_rational(other)
        return UniPoly(self.var, [c * scalar for c in self.coeffs])

    __rmul__ = __mul__

    def scale(self, scalar) -> "UniPoly":
        return self * as_rational(scalar)

    def __call__(self, x) -> Fraction:
        """Exact evaluation by Horner's rule."""
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly(self.var, [i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        lead = self.leading
        return UniPoly(self.var, [c / lead for c in self.coeffs])

    def divmod(self, divisor: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        """Exact polynomial division with remainder."""
        self._check_var(divisor)
        if divisor.is_zero:
            raise DomainError("polynomial division by zero")
        rem = list(self.coeffs)
        dlead = divisor.leading
        ddeg = divisor.degree
        quot = [Fraction(0)] * max(len(rem) - ddeg, 0)
        for i in range(len(rem) - 1, ddeg - 1, -1):
            if rem[i] == 0:
                continue
            factor = rem[i] / dlead
            quot[i - ddeg] = factor
            for j, dc in enumerate(divisor.coeffs):
                rem[i - ddeg + j] -= factor * dc
        return UniPoly(self.var, quot), UniPoly(self.var, rem)

    # -- substitution ---------------------------------------------------------

    def substitute(self, value) -> Fraction:
        """Replace the variable by an exact rational (same as calling)."""
        return self(value)

    def substitute_alpha_r(self) -> "BiPoly":
        """Replace n by the linear form alpha*r, yielding a BiPoly in (r, alpha).

        Only meaningful for polynomials in n.
        """
        if self.var != VAR_N:
            raise VariableMismatchError("substitution n := alpha*r needs a polynomial in n")
        terms = {(i, i): c for i, c in enumerate(self.coeffs) if c != 0}
        return BiPoly(terms)


class BiPoly:
    """Sparse exact polynomial in the fixed variable pair (r, alpha)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Fraction | int | str]):
        clean: dict[tuple[int, int], Fraction] = {}
        for (dr, da), c in terms.items():
            c = as_rational(c)
            if c != 0:
                clean[(int(dr), int(da))] = c
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls({})

    @classmethod
    def constant(cls, value) -> "BiPoly":
        return cls({(0, 0): as_rational(value)})

    @classmethod
    def var_r(cls) -> "BiPoly":
        return cls({(1, 0): Fraction(1)})

    @classmethod
    def var_alpha(cls) -> "BiPoly":
        return cls({(0, 1): Fraction(1)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree_r(self) -> int:
        return max((dr for dr, _ in self.terms), default=-1)

    def coeff(self, dr: int, da: int) -> Fraction:
        return self.terms.get((dr, da), Fraction(0))

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def __repr__(self) -> str:
        return f"BiPoly({self.terms!r})"

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return BiPoly(out)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, Fraction(0)) - c
        return BiPoly(out)

    def __neg__(self) -> "BiPoly":
        return BiPoly({key: -c for key, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, BiPoly):
            out: dict[tuple[int, int], Fraction] = {}
            for (r1, a1), c1 in self.terms.items():
                for (r2, a2), c2 in other.terms.items():
                    key = (r1 + r2, a1 + a2)
                    out[key] = out.get(key, Fraction(0)) + c1 * c2
            return BiPoly(out)
        scalar = as_rational(other)
        return BiPoly({key: c * scalar for key, c in self.terms.items()})

    __rmul__ = __mul__

    def scale(self, scalar) -> "BiPoly":
        return self * as_rational(scalar)

    def __call__(self, r, alpha) -> Fraction:
        r = as_rational(r)
        alpha = as_rational(alpha)
        return sum(
            (c * r**dr * alpha**da for (dr, da), c in self.terms.items()),
            Fraction(0),
        )

    def substitute_r(self, value) -> UniPoly:
        """Fix r to an exact rational, leaving a polynomial in alpha."""
        value = as_rational(value)
        max_da = max((da for _, da in self.terms), default=-1)
        coeffs = [Fraction(0)] * (max_da + 1)
        for (dr, da), c in self.terms.items():
            coeffs[da] += c * value**dr
        return UniPoly(VAR_ALPHA, coeffs)


def collect_by_degree(p: BiPoly) -> list[UniPoly]:
    """Coefficients of r^0..r^d as exact polynomials in alpha.

    Reassembling sum(r^i * c_i) reproduces ``p`` exactly.
    """
    d = p.degree_r()
    if d < 0:
        return []
    groups: list[dict[int, Fraction]] = [dict() for _ in range(d + 1)]
    for (dr, da), c in p.terms.items():
        groups[dr][da] = c
    out = []
    for g in groups:
        size = max(g, default=-1) + 1
        coeffs = [Fraction(0)] * size
        for da, c in g.items():
            coeffs[da] = c
        out.append(UniPoly(VAR_ALPHA, coeffs))
    return out


def assemble_from_degrees(parts: Sequence[UniPoly]) -> BiPoly:
    """Inverse of :func:`collect_by_degree`: sum of r^i * parts[i]."""
    terms: dict[tuple[int, int], Fraction] = {}
    for dr, part in enumerate(parts):
        for da, c in enumerate(part.coeffs):
            if c != 0:
                terms[(dr, da)] = terms.get((dr, da), Fraction(0)) + c
    return BiPoly(terms)


def uni(var: str, *coeffs) -> UniPoly:
    """Shorthand constructor: coefficients listed from degree 0 upward."""
    return UniPoly(var, list(coeffs))
