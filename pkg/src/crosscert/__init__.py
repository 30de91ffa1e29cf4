"""Exact-rational certification of crossing-number lower bounds.

The kernel (rational scalars, polynomials, Sturm counting, sign certificates)
lives in :mod:`crosscert.certify` and friends; named bound formulas in
:mod:`crosscert.bounds`; the theorem-level pipelines and the exclusion table
in :mod:`crosscert.certifier`; serialization in :mod:`crosscert.reporting`.
"""

from .bounds import (
    EdgeBoundKind,
    ProbBound,
    SamplingBound,
    SubdivisionWindow,
    Thm4Window,
    chromatic_bound_from_cr,
    crossing_lb,
    edge_lower_bound,
    immersion_deficit,
    prob_lb,
    sampling_lb,
    w_edge_average,
    zarankiewicz_upper,
)
from .certifier import (
    Report,
    TableRow,
    build_table,
    build_table_row,
    coverage_check,
    excluded_orders,
    finalish_check,
    verify,
    verify_theorem2,
    verify_theorem4,
    verify_theorem6,
    verify_theorem9,
)
from .certify import Claim, Refutation, SignCertificate, certify_sign, integer_feasible_set
from .intervals import ClosedRatInterval, IntInterval
from .poly import BiPoly, UniPoly, collect_by_degree
from .rational import Rational, rational_from_decimal
from .sturm import sturm_root_count

__all__ = [
    "BiPoly",
    "Claim",
    "ClosedRatInterval",
    "EdgeBoundKind",
    "IntInterval",
    "ProbBound",
    "Rational",
    "Refutation",
    "Report",
    "SamplingBound",
    "SignCertificate",
    "SubdivisionWindow",
    "TableRow",
    "Thm4Window",
    "UniPoly",
    "build_table",
    "build_table_row",
    "certify_sign",
    "chromatic_bound_from_cr",
    "collect_by_degree",
    "coverage_check",
    "crossing_lb",
    "edge_lower_bound",
    "excluded_orders",
    "finalish_check",
    "immersion_deficit",
    "integer_feasible_set",
    "prob_lb",
    "rational_from_decimal",
    "sampling_lb",
    "sturm_root_count",
    "verify",
    "verify_theorem2",
    "verify_theorem4",
    "verify_theorem6",
    "verify_theorem9",
    "w_edge_average",
    "zarankiewicz_upper",
]
