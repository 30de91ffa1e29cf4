"""Exception types shared across the certification engine."""

from __future__ import annotations


class CrosscertError(Exception):
    """Base class for all engine errors."""


class ParseError(CrosscertError):
    """Malformed textual input (decimal literals, bound specs, JSON payloads)."""


class DomainError(CrosscertError):
    """A precondition on a formula's arguments was violated."""


class VariableMismatchError(CrosscertError):
    """Polynomial operands carry incompatible variable tags."""


class ContiguityError(CrosscertError):
    """An integer feasible set was found to be non-contiguous inside its bracket.

    ``gap`` holds integers between two feasible runs where the polynomial is
    negative.
    """

    def __init__(self, message: str, gap: list[int]):
        super().__init__(message)
        self.gap = gap
