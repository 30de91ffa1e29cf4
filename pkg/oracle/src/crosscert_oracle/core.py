"""Reference derivation of the exclusion table via a computer-algebra solver.

Deliberately independent of the exact-rational engine: each bound is solved
over the reals with float coefficients and the resulting endpoints are
rounded (ceiling below, floor above), in classic script style.  The output
is the same canonical table-v1 JSON the engine emits, so the two pipelines
can be diffed cell-for-cell.
"""

from __future__ import annotations

import functools
import json
import math
from fractions import Fraction

from sympy import Interval, oo, solve_univariate_inequality, symbols

# inclusion probabilities for r = 15..26, kept as decimal text so emission
# stays exact while the solver sees plain floats
P_TEXT = [".75", ".72", ".68", ".65", ".62", ".60", ".58", ".56", ".54", ".52", ".50", ".50"]

TABLE_SCHEMA = "table-v1"


class OracleStructureError(Exception):
    """The real solution set of a bound was not a single interval."""


def drawing_upper(r: int) -> int:
    return (r // 2) * ((r - 1) // 2) * ((r - 2) // 2) * ((r - 3) // 2) // 4


def solve_feasible_interval(expr, n) -> tuple[float, float | None]:
    """Real feasible interval of ``expr >= 0`` with raw float endpoints."""
    solution = solve_univariate_inequality(expr >= 0, n, relational=False)
    if not isinstance(solution, Interval):
        raise OracleStructureError(f"solution set is not one interval: {solution}")
    upper = None if solution.end is oo else float(solution.end)
    return float(solution.start), upper


def round_interval(lower: float, upper: float | None) -> tuple[int, int | None]:
    """Round the lower endpoint up and the upper endpoint down (unless oo)."""
    return math.ceil(lower), None if upper is None else math.floor(upper)


@functools.lru_cache(maxsize=None)
def oracle_row(r: int) -> dict:
    """One table row, solved symbolically and rounded."""
    if not 15 <= r <= 26:
        raise ValueError(f"rows cover 15 <= r <= 26, got r={r}")
    n = symbols("n", real=True)
    target = drawing_upper(r)
    p_text = P_TEXT[r - 15]
    p = float(p_text)

    # k=12 and k=22 subgraph sampling with the dense-range edge count
    gallai_edges = 5.0 * ((r - 1) * n + (n - r) * (2 * r - n) - 2) / 2
    ineq2 = gallai_edges * (n - 2) * (n - 3) / ((12 - 2) * (12 - 3)) - 203 * n * (n - 1) * (
        n - 2
    ) * (n - 3) / (9 * 12 * (12 - 1) * (12 - 3)) - target
    ineq3 = gallai_edges * (n - 2) * (n - 3) / ((22 - 2) * (22 - 3)) - 203 * n * (n - 1) * (
        n - 2
    ) * (n - 3) / (9 * 22 * (22 - 1) * (22 - 3)) - target

    # k=24 sampling and the probabilistic bound, both with the KS edge count
    ineq4 = 5.0 * ((r - 1) * n + 2 * (r - 3)) / 2 * (n - 2) * (n - 3) / (
        (24 - 2) * (24 - 3)
    ) - 203 * n * (n - 1) * (n - 2) * (n - 3) / (9 * 24 * (24 - 1) * (24 - 3)) - target
    lem6 = (
        5.0 * ((r - 1) / 2 * n + r - 3) / p**2
        - 203 * n / (9 * p**3)
        + 406 / (9 * p**4)
        - 0.5
        - target
    )

    intervals = {
        "lem_c": (r, r + 4),
        "ineq2": round_interval(*solve_feasible_interval(ineq2, n)),
        "thm4": (math.ceil(1.228 * r), math.floor(1.768 * r)),
        "ineq3": round_interval(*solve_feasible_interval(ineq3, n)),
        "ineq4": round_interval(*solve_feasible_interval(ineq4, n)),
        "lem6": round_interval(*solve_feasible_interval(lem6, n)),
    }
    if intervals["lem6"][1] is not None:
        raise OracleStructureError("the probabilistic bound must be unbounded above")

    horizon = intervals["lem6"][0]

    def covered(m: int) -> bool:
        return any(lo <= m and (hi is None or m <= hi) for lo, hi in intervals.values())

    possible = [m for m in range(r, horizon) if not covered(m)]

    p_exact = Fraction(p_text)
    row = {
        "r": r,
        "cr_upper": target,
        "p": {"num": str(p_exact.numerator), "den": str(p_exact.denominator)},
        "possible_n": possible,
    }
    for name, (lo, hi) in intervals.items():
        row[name] = {"lo": lo, "hi": "oo" if hi is None else hi}
    return row


def oracle_table(rmin: int, rmax: int) -> bytes:
    """Canonical table-v1 JSON for rows rmin..rmax."""
    if not 15 <= rmin <= rmax <= 26:
        raise ValueError(f"need 15 <= rmin <= rmax <= 26, got {rmin}..{rmax}")
    payload = {"schema": TABLE_SCHEMA, "rows": [oracle_row(r) for r in range(rmin, rmax + 1)]}
    return json.dumps(payload, sort_keys=True, separators=(",", ":")).encode("utf-8")
