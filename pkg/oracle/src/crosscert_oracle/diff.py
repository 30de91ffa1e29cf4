"""Cell-for-cell diff between two table-v1 payloads.

Values are rationalized before comparison (num/den pairs compare as exact
fractions, intervals structurally), so the diff is empty exactly when the
two tables agree mathematically, not merely textually.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

TABLE_SCHEMA = "table-v1"

_INTERVAL_COLUMNS = ("lem_c", "ineq2", "thm4", "ineq3", "ineq4", "lem6")
_ROW_FIELDS = {"r", "cr_upper", "p", "possible_n", *_INTERVAL_COLUMNS}


class SchemaError(Exception):
    """A payload does not satisfy table-v1; ``field`` names the offender."""

    def __init__(self, field: str, message: str):
        super().__init__(f"field {field!r}: {message}")
        self.field = field


@dataclass(frozen=True)
class CellMismatch:
    r: int
    column: str
    left: str
    right: str

    def __str__(self) -> str:
        return f"row {self.r}, column {self.column}: {self.left} != {self.right}"


def _parse_interval(obj, field: str) -> tuple[int, int | None] | None:
    if not isinstance(obj, dict):
        raise SchemaError(field, "expected an interval object")
    if obj.get("empty"):
        return None
    if set(obj) != {"lo", "hi"}:
        raise SchemaError(field, "expected lo/hi keys")
    lo, hi = obj["lo"], obj["hi"]
    if not isinstance(lo, int):
        raise SchemaError(field, "lo must be an integer")
    if hi == "oo":
        return lo, None
    if not isinstance(hi, int):
        raise SchemaError(field, "hi must be an integer or 'oo'")
    return lo, hi


def _parse_rational(obj, field: str) -> Fraction:
    if not isinstance(obj, dict) or set(obj) != {"num", "den"}:
        raise SchemaError(field, "expected a num/den rational object")
    try:
        return Fraction(int(obj["num"]), int(obj["den"]))
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(field, f"bad rational: {exc}") from exc


def parse_table(data: bytes, label: str) -> dict[int, dict]:
    """Validate a table-v1 payload and index its rows by r."""
    try:
        payload = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise SchemaError(f"{label}", f"not valid JSON: {exc}") from exc
    if not isinstance(payload, dict) or payload.get("schema") != TABLE_SCHEMA:
        raise SchemaError(f"{label}.schema", f"expected {TABLE_SCHEMA!r}")
    rows = payload.get("rows")
    if not isinstance(rows, list):
        raise SchemaError(f"{label}.rows", "expected a list")
    indexed: dict[int, dict] = {}
    for i, raw in enumerate(rows):
        where = f"{label}.rows[{i}]"
        if not isinstance(raw, dict):
            raise SchemaError(where, "expected a row object")
        if set(raw) != _ROW_FIELDS:
            missing = _ROW_FIELDS - set(raw)
            extra = set(raw) - _ROW_FIELDS
            raise SchemaError(where, f"wrong fields (missing {sorted(missing)}, extra {sorted(extra)})")
        if not isinstance(raw["r"], int) or not isinstance(raw["cr_upper"], int):
            raise SchemaError(f"{where}.r", "r and cr_upper must be integers")
        possible = raw["possible_n"]
        if not isinstance(possible, list) or not all(isinstance(x, int) for x in possible):
            raise SchemaError(f"{where}.possible_n", "expected a list of integers")
        row = {
            "cr_upper": raw["cr_upper"],
            "p": _parse_rational(raw["p"], f"{where}.p"),
            "possible_n": sorted(possible),
        }
        for name in _INTERVAL_COLUMNS:
            row[name] = _parse_interval(raw[name], f"{where}.{name}")
        indexed[raw["r"]] = row
    return indexed


def _render(value) -> str:
    if value is None:
        return "(empty)"
    if isinstance(value, tuple):
        lo, hi = value
        return f"[{lo},oo)" if hi is None else f"[{lo},{hi}]"
    return str(value)


def diff_tables(left_data: bytes, right_data: bytes) -> list[CellMismatch]:
    """All per-cell mismatches; empty iff the tables agree."""
    left = parse_table(left_data, "left")
    right = parse_table(right_data, "right")
    out: list[CellMismatch] = []
    for r in sorted(set(left) | set(right)):
        if r not in left:
            out.append(CellMismatch(r, "(row)", "(missing)", "present"))
            continue
        if r not in right:
            out.append(CellMismatch(r, "(row)", "present", "(missing)"))
            continue
        for column in ("cr_upper", *_INTERVAL_COLUMNS, "p", "possible_n"):
            a, b = left[r][column], right[r][column]
            if a != b:
                out.append(CellMismatch(r, column, _render(a), _render(b)))
    return out


def oracle_diff(primary_path, oracle_path) -> list[CellMismatch]:
    """Diff two table-v1 files (primary engine output vs oracle output)."""
    with open(primary_path, "rb") as fh:
        primary = fh.read()
    with open(oracle_path, "rb") as fh:
        oracle = fh.read()
    return diff_tables(primary, oracle)
