"""Serialization of tables, verification reports, and plot grids.

JSON output is canonical: sorted keys, compact separators, rationals as
{"num": "...", "den": "..."} string pairs.  Identical inputs produce
byte-identical output, so golden-file and cross-implementation comparisons
need no tolerance.  Schemas (table-v1, report-v1, grid-v1) are documented in
the README.
"""

from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from .bounds import gallai_window_quartic
from .certify import Claim, SignCertificate
from .certifier import (
    Discrepancy,
    Report,
    ReportStep,
    TableRow,
    recomputed_parts,
)
from .errors import DomainError, ParseError
from .intervals import ClosedRatInterval, IntInterval
from .poly import UniPoly
from .rational import as_rational, decimal_str, rat_str


class OutputFormat(str, enum.Enum):
    CSV = "csv"
    JSON = "json"
    TEXT = "text"


def canonical_json_bytes(obj) -> bytes:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")).encode("utf-8")


# -- JSON atoms ------------------------------------------------------------------


def rational_to_json(q: Fraction) -> dict:
    return {"num": str(q.numerator), "den": str(q.denominator)}


def rational_from_json(obj, field: str) -> Fraction:
    if not isinstance(obj, dict) or set(obj) != {"num", "den"}:
        raise ParseError(f"field {field!r}: expected a num/den rational object")
    try:
        return Fraction(int(obj["num"]), int(obj["den"]))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"field {field!r}: bad rational: {exc}") from exc


def interval_to_json(iv: IntInterval) -> dict:
    if iv.empty:
        return {"empty": True}
    return {"lo": iv.lo, "hi": "oo" if iv.hi is None else iv.hi}


def interval_from_json(obj, field: str) -> IntInterval:
    if not isinstance(obj, dict):
        raise ParseError(f"field {field!r}: expected an interval object")
    if obj.get("empty"):
        return IntInterval.make_empty()
    if set(obj) != {"lo", "hi"}:
        raise ParseError(f"field {field!r}: expected lo/hi keys")
    lo, hi = obj["lo"], obj["hi"]
    if not isinstance(lo, int):
        raise ParseError(f"field {field!r}: lo must be an integer")
    if hi == "oo":
        return IntInterval(lo=lo, hi=None)
    if not isinstance(hi, int):
        raise ParseError(f"field {field!r}: hi must be an integer or 'oo'")
    return IntInterval(lo=lo, hi=hi)


def poly_to_json(p: UniPoly) -> dict:
    return {"var": p.var, "coeffs": [rational_to_json(c) for c in p.coeffs]}


def poly_from_json(obj, field: str) -> UniPoly:
    if not isinstance(obj, dict) or set(obj) != {"var", "coeffs"}:
        raise ParseError(f"field {field!r}: expected a var/coeffs polynomial object")
    coeffs = [rational_from_json(c, f"{field}.coeffs[{i}]") for i, c in enumerate(obj["coeffs"])]
    return UniPoly(obj["var"], coeffs)


# -- table serialization -----------------------------------------------------------

TABLE_SCHEMA = "table-v1"
_TABLE_COLUMNS = ("lem_c", "ineq2", "thm4", "ineq3", "ineq4", "lem6")


def table_row_to_json(row: TableRow) -> dict:
    out = {
        "r": row.r,
        "cr_upper": row.cr_upper,
        "p": rational_to_json(row.p),
        "possible_n": sorted(row.possible_n),
    }
    for name in _TABLE_COLUMNS:
        out[name] = interval_to_json(getattr(row, name))
    return out


def table_row_from_json(obj, where: str) -> TableRow:
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected a row object")
    expected = {"r", "cr_upper", "p", "possible_n", *_TABLE_COLUMNS}
    if set(obj) != expected:
        missing = expected - set(obj)
        extra = set(obj) - expected
        raise ParseError(f"{where}: wrong fields (missing {sorted(missing)}, extra {sorted(extra)})")
    if not isinstance(obj["r"], int) or not isinstance(obj["cr_upper"], int):
        raise ParseError(f"{where}: r and cr_upper must be integers")
    possible = obj["possible_n"]
    if not isinstance(possible, list) or not all(isinstance(x, int) for x in possible):
        raise ParseError(f"{where}: possible_n must be a list of integers")
    return TableRow(
        r=obj["r"],
        cr_upper=obj["cr_upper"],
        lem_c=interval_from_json(obj["lem_c"], f"{where}.lem_c"),
        ineq2=interval_from_json(obj["ineq2"], f"{where}.ineq2"),
        thm4=interval_from_json(obj["thm4"], f"{where}.thm4"),
        ineq3=interval_from_json(obj["ineq3"], f"{where}.ineq3"),
        ineq4=interval_from_json(obj["ineq4"], f"{where}.ineq4"),
        lem6=interval_from_json(obj["lem6"], f"{where}.lem6"),
        p=rational_from_json(obj["p"], f"{where}.p"),
        possible_n=frozenset(possible),
    )


def _p_two_decimals(p: Fraction) -> str:
    hundredths = round(p * 100)
    return f"{hundredths // 100}.{hundredths % 100:02d}"


def _possible_str(possible: frozenset[int], sep: str) -> str:
    if not possible:
        return "-"
    return sep.join(str(n) for n in sorted(possible))


def emit_table(rows: list[TableRow], fmt: OutputFormat) -> bytes:
    """Serialize table rows; deterministic and byte-identical per input."""
    if not rows:
        raise DomainError("refusing to emit an empty table")
    if fmt is OutputFormat.JSON:
        payload = {"schema": TABLE_SCHEMA, "rows": [table_row_to_json(r) for r in rows]}
        return canonical_json_bytes(payload)
    if fmt is OutputFormat.CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["r", "cr_upper", "lem_c", "ineq2", "thm4", "ineq3", "ineq4", "lem6", "p", "possible_n"])
        for row in rows:
            cells = [str(row.r), str(row.cr_upper)]
            cells += [str(getattr(row, name)) for name in _TABLE_COLUMNS]
            cells.append(rat_str(row.p))
            cells.append(_possible_str(row.possible_n, " "))
            writer.writerow(cells)
        return buffer.getvalue().encode("utf-8")
    if fmt is OutputFormat.TEXT:
        header = (
            f"{'r':>2}  {'Cr<=':>5}  {'lemC':>9}  {'ineq2':>9}  {'thm4':>9}"
            f"  {'ineq3':>9}  {'ineq4':>9}  {'lem6':>9}  {'p':>4}  possible n"
        )
        lines = [header]
        for row in rows:
            lines.append(
                f"{row.r:>2}  {row.cr_upper:>5}  {str(row.lem_c):>9}  {str(row.ineq2):>9}"
                f"  {str(row.thm4):>9}  {str(row.ineq3):>9}  {str(row.ineq4):>9}"
                f"  {str(row.lem6):>9}  {_p_two_decimals(row.p):>4}  {_possible_str(row.possible_n, ', ')}"
            )
        return ("\n".join(lines) + "\n").encode("utf-8")
    raise DomainError(f"unsupported table format {fmt!r}")


def parse_table_json(data: bytes) -> list[TableRow]:
    try:
        payload = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ParseError(f"table payload is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict) or payload.get("schema") != TABLE_SCHEMA:
        raise ParseError(f"field 'schema': expected {TABLE_SCHEMA!r}")
    rows = payload.get("rows")
    if not isinstance(rows, list):
        raise ParseError("field 'rows': expected a list")
    return [table_row_from_json(obj, f"rows[{i}]") for i, obj in enumerate(rows)]


# -- report serialization -----------------------------------------------------------

REPORT_SCHEMA = "report-v1"


def certificate_to_json(cert: SignCertificate) -> dict:
    return {
        "poly": poly_to_json(cert.poly),
        "interval": {
            "lo": rational_to_json(cert.interval.lo),
            "hi": rational_to_json(cert.interval.hi),
        },
        "claim": cert.claim.value,
        "interior_root_count": cert.interior_root_count,
        "endpoint_values": [rational_to_json(v) for v in cert.endpoint_values],
        "squarefree": poly_to_json(cert.squarefree_witness),
    }


def certificate_from_json(obj, field: str) -> SignCertificate:
    expected = {"poly", "interval", "claim", "interior_root_count", "endpoint_values", "squarefree"}
    if not isinstance(obj, dict) or set(obj) != expected:
        raise ParseError(f"field {field!r}: malformed certificate object")
    interval = obj["interval"]
    if not isinstance(interval, dict) or set(interval) != {"lo", "hi"}:
        raise ParseError(f"field {field!r}.interval: expected lo/hi rationals")
    values = obj["endpoint_values"]
    if not isinstance(values, list) or len(values) != 2:
        raise ParseError(f"field {field!r}.endpoint_values: expected a pair")
    return SignCertificate(
        poly=poly_from_json(obj["poly"], f"{field}.poly"),
        interval=ClosedRatInterval(
            rational_from_json(interval["lo"], f"{field}.interval.lo"),
            rational_from_json(interval["hi"], f"{field}.interval.hi"),
        ),
        claim=Claim(obj["claim"]),
        interior_root_count=int(obj["interior_root_count"]),
        endpoint_values=(
            rational_from_json(values[0], f"{field}.endpoint_values[0]"),
            rational_from_json(values[1], f"{field}.endpoint_values[1]"),
        ),
        squarefree_witness=poly_from_json(obj["squarefree"], f"{field}.squarefree"),
    )


def report_to_json(report: Report) -> dict:
    return {
        "schema": REPORT_SCHEMA,
        "theorem": report.theorem,
        "overall": report.overall,
        "steps": [
            {
                "description": step.description,
                "passed": step.passed,
                "detail": step.detail,
                "certificate": None if step.certificate is None else certificate_to_json(step.certificate),
                "witness": None if step.witness is None else rational_to_json(step.witness),
            }
            for step in report.steps
        ],
        "discrepancies": [
            {"where": d.where, "quoted": d.quoted, "recomputed": d.recomputed, "note": d.note}
            for d in report.discrepancies
        ],
    }


def parse_report_json(data: bytes) -> Report:
    try:
        payload = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ParseError(f"report payload is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict) or payload.get("schema") != REPORT_SCHEMA:
        raise ParseError(f"field 'schema': expected {REPORT_SCHEMA!r}")
    report = Report(payload.get("theorem", ""))
    steps = payload.get("steps")
    if not isinstance(steps, list):
        raise ParseError("field 'steps': expected a list")
    for i, obj in enumerate(steps):
        if not isinstance(obj, dict):
            raise ParseError(f"steps[{i}]: expected an object")
        cert = obj.get("certificate")
        witness = obj.get("witness")
        report.steps.append(
            ReportStep(
                description=obj.get("description", ""),
                passed=bool(obj.get("passed")),
                detail=obj.get("detail", ""),
                certificate=None if cert is None else certificate_from_json(cert, f"steps[{i}].certificate"),
                witness=None if witness is None else rational_from_json(witness, f"steps[{i}].witness"),
            )
        )
    for i, obj in enumerate(payload.get("discrepancies", [])):
        if not isinstance(obj, dict):
            raise ParseError(f"discrepancies[{i}]: expected an object")
        report.discrepancies.append(
            Discrepancy(
                where=obj.get("where", ""),
                quoted=obj.get("quoted", ""),
                recomputed=obj.get("recomputed", ""),
                note=obj.get("note", ""),
            )
        )
    if bool(payload.get("overall")) != report.overall:
        raise ParseError("field 'overall': inconsistent with the recorded steps")
    return report


def render_report_text(report: Report) -> str:
    lines = [f"{report.theorem}: {'PASS' if report.overall else 'FAIL'}"]
    for i, step in enumerate(report.steps, 1):
        mark = "PASS" if step.passed else "FAIL"
        lines.append(f"  [{mark}] {i:>2}. {step.description}")
        if step.detail:
            lines.append(f"          {step.detail}")
        if step.witness is not None:
            lines.append(f"          witness: {rat_str(step.witness)}")
    if report.discrepancies:
        lines.append(f"  discrepancies ({len(report.discrepancies)}):")
        for d in report.discrepancies:
            note = f"  ({d.note})" if d.note else ""
            lines.append(f"    - {d.where}: quoted {d.quoted} | recomputed {d.recomputed}{note}")
    return "\n".join(lines) + "\n"


def emit_report(report: Report, fmt: OutputFormat) -> bytes:
    if fmt is OutputFormat.JSON:
        return canonical_json_bytes(report_to_json(report))
    if fmt is OutputFormat.TEXT:
        return render_report_text(report).encode("utf-8")
    raise DomainError(f"unsupported report format {fmt!r}")


# -- plot grids ----------------------------------------------------------------------

GRID_SCHEMA = "grid-v1"

GRID_TARGETS = ("f-of-alpha-k", "p19-parts", "p15-parts", "p12-parts")

_PARTS_RANGES = {
    "p19-parts": (Fraction(1600, 1000), Fraction(1775, 1000)),
    "p15-parts": (Fraction(1300, 1000), Fraction(1650, 1000)),
    "p12-parts": (Fraction(1200, 1000), Fraction(1450, 1000)),
}

_CONTOUR_K_RANGE = (10, 24)
_CONTOUR_ALPHA_RANGE = (Fraction(11, 10), Fraction(2))


@dataclass(frozen=True)
class PlotGrid:
    """Exact samples of a named target over a rational grid."""

    target: str
    alpha_axis: ClosedRatInterval
    step: Fraction
    k_axis: tuple[int, int] | None
    rows: tuple[tuple[str, tuple[Fraction, ...]], ...]


def _alpha_grid(lo: Fraction, hi: Fraction, step: Fraction) -> list[Fraction]:
    if step <= 0:
        raise DomainError(f"grid step must be positive, got {step}")
    out = []
    x = lo
    while x <= hi:
        out.append(x)
        x += step
    return out


def build_plot_grid(
    target: str,
    alpha_lo: Fraction | None = None,
    alpha_hi: Fraction | None = None,
    step: Fraction | None = None,
) -> PlotGrid:
    """Sample a plot target exactly; consumers recover contours from the signs."""
    if target not in GRID_TARGETS:
        raise DomainError(f"unknown plot target {target!r}; choose from {GRID_TARGETS}")
    if target == "f-of-alpha-k":
        lo = as_rational(alpha_lo) if alpha_lo is not None else _CONTOUR_ALPHA_RANGE[0]
        hi = as_rational(alpha_hi) if alpha_hi is not None else _CONTOUR_ALPHA_RANGE[1]
        step = as_rational(step) if step is not None else Fraction(1, 100)
        alphas = _alpha_grid(lo, hi, step)
        rows = []
        for k in range(_CONTOUR_K_RANGE[0], _CONTOUR_K_RANGE[1] + 1):
            quartic = gallai_window_quartic(k)
            rows.append((f"k={k}", tuple(quartic(a) for a in alphas)))
        return PlotGrid(target, ClosedRatInterval(lo, hi), step, _CONTOUR_K_RANGE, tuple(rows))
    k = int(target[1:3])
    default_lo, default_hi = _PARTS_RANGES[target]
    lo = as_rational(alpha_lo) if alpha_lo is not None else default_lo
    hi = as_rational(alpha_hi) if alpha_hi is not None else default_hi
    step = as_rational(step) if step is not None else Fraction(1, 1000)
    alphas = _alpha_grid(lo, hi, step)
    parts = recomputed_parts(k)
    rows = tuple(
        (f"q_{i}", tuple(parts[i](a) for a in alphas)) for i in (4, 3, 2, 1)
    )
    return PlotGrid(target, ClosedRatInterval(lo, hi), step, None, rows)


def grid_to_json(grid: PlotGrid) -> dict:
    return {
        "schema": GRID_SCHEMA,
        "target": grid.target,
        "alpha_axis": {
            "lo": rational_to_json(grid.alpha_axis.lo),
            "hi": rational_to_json(grid.alpha_axis.hi),
            "step": rational_to_json(grid.step),
        },
        "k_axis": None if grid.k_axis is None else {"lo": grid.k_axis[0], "hi": grid.k_axis[1]},
        "rows": [
            {"label": label, "samples": [rational_to_json(v) for v in samples]}
            for label, samples in grid.rows
        ],
    }


def parse_grid_json(data: bytes) -> PlotGrid:
    try:
        payload = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ParseError(f"grid payload is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict) or payload.get("schema") != GRID_SCHEMA:
        raise ParseError(f"field 'schema': expected {GRID_SCHEMA!r}")
    axis = payload.get("alpha_axis")
    if not isinstance(axis, dict) or set(axis) != {"lo", "hi", "step"}:
        raise ParseError("field 'alpha_axis': expected lo/hi/step rationals")
    k_axis = payload.get("k_axis")
    if k_axis is not None:
        if not isinstance(k_axis, dict) or set(k_axis) != {"lo", "hi"}:
            raise ParseError("field 'k_axis': expected lo/hi integers or null")
        k_axis = (int(k_axis["lo"]), int(k_axis["hi"]))
    rows = []
    for i, obj in enumerate(payload.get("rows", [])):
        if not isinstance(obj, dict) or set(obj) != {"label", "samples"}:
            raise ParseError(f"rows[{i}]: expected label/samples")
        rows.append(
            (
                obj["label"],
                tuple(
                    rational_from_json(v, f"rows[{i}].samples[{j}]")
                    for j, v in enumerate(obj["samples"])
                ),
            )
        )
    return PlotGrid(
        target=payload.get("target", ""),
        alpha_axis=ClosedRatInterval(
            rational_from_json(axis["lo"], "alpha_axis.lo"),
            rational_from_json(axis["hi"], "alpha_axis.hi"),
        ),
        step=rational_from_json(axis["step"], "alpha_axis.step"),
        k_axis=k_axis,
        rows=tuple(rows),
    )


def emit_plot_grid(grid: PlotGrid, fmt: OutputFormat) -> bytes:
    if fmt is OutputFormat.JSON:
        return canonical_json_bytes(grid_to_json(grid))
    alphas = _alpha_grid(grid.alpha_axis.lo, grid.alpha_axis.hi, grid.step)
    header = ["label"] + [rat_str(a) for a in alphas]
    if fmt is OutputFormat.CSV:
        lines = [",".join(header)]
        for label, samples in grid.rows:
            lines.append(",".join([label] + [rat_str(v) for v in samples]))
        return ("\n".join(lines) + "\n").encode("utf-8")
    if fmt is OutputFormat.TEXT:
        lines = [f"target {grid.target}, alpha in {grid.alpha_axis}, step {rat_str(grid.step)}"]
        for label, samples in grid.rows:
            rendered = "  ".join(decimal_str(v) for v in samples)
            lines.append(f"{label}: {rendered}")
        return ("\n".join(lines) + "\n").encode("utf-8")
    raise DomainError(f"unsupported grid format {fmt!r}")
