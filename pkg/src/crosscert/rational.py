"""Exact rational scalars.

Every quantity on the certification path is a ``fractions.Fraction``: always in
lowest terms, positive denominator, arbitrary precision.  Floating point is
never used to decide a sign.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

_DECIMAL_RE = re.compile(r"^[+-]?[0-9]+(\.[0-9]+)?$")


def rational_from_decimal(text: str) -> Fraction:
    """Parse a plain decimal literal into an exact fraction.

    Accepts an optional sign, digits, and an optional fractional part
    ("27.48" -> 687/25).  Scientific notation and other Fraction-isms are
    rejected so the accepted grammar stays reviewable.
    """
    if not isinstance(text, str) or not _DECIMAL_RE.match(text):
        raise ParseError(f"not a decimal literal: {text!r}")
    return Fraction(text)


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction, or decimal string to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return rational_from_decimal(value)
    raise ParseError(f"cannot interpret {value!r} as an exact rational")


def decimal_str(q: Fraction, digits: int = 6) -> str:
    """Human-oriented decimal rendering with ~``digits`` significant digits.

    Display only; never fed back into any comparison.
    """
    if q == 0:
        return "0"
    sign = "-" if q < 0 else ""
    q = abs(q)
    if q >= 1:
        int_digits = len(str(q.numerator // q.denominator))
        frac_digits = max(digits - int_digits, 0)
    else:
        leading_zeros = 0
        t = q
        while t < 1:
            t *= 10
            leading_zeros += 1
        frac_digits = leading_zeros + digits - 1
    scaled = round(q * 10**frac_digits)
    s = str(scaled)
    if frac_digits == 0:
        return sign + s
    s = s.rjust(frac_digits + 1, "0")
    int_part, frac_part = s[:-frac_digits], s[-frac_digits:].rstrip("0")
    return sign + int_part + ("." + frac_part if frac_part else "")


def rat_str(q: Fraction) -> str:
    """Canonical "num/den" (or plain integer) rendering."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
