"""Computer-algebra reference pipeline for the exclusion table, plus a diff harness."""

from .core import OracleStructureError, oracle_row, oracle_table
from .diff import CellMismatch, SchemaError, diff_tables, oracle_diff

__all__ = [
    "CellMismatch",
    "OracleStructureError",
    "SchemaError",
    "diff_tables",
    "oracle_diff",
    "oracle_row",
    "oracle_table",
]
