"""Command-line entry point.

Verbs: table (rebuild the exclusion table), verify (run a named check),
exclude (one bound's excluded orders, with endpoint witnesses), eval (point
evaluation of a bound), plot (export an exact sample grid).

Bound specs use a colon-delimited mini-grammar:

    bound   ::= "sampling:k=" INT ":edge=" edge
              | "prob:p=" DECIMAL ":edge=" edge
              | "window:" ("lemC" | "thm4")
    edge    ::= "gallai" | "ks" | "mindeg"

Exit codes: 0 success / verification pass, 1 verification failure, 2 usage
or grammar errors, 3 violated preconditions.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import certifier
from .bounds import (
    BoundSpec,
    EdgeBoundKind,
    ProbBound,
    SamplingBound,
    SubdivisionWindow,
    Thm4Window,
    bound_poly_in_n,
    edge_lower_bound,
    prob_lb,
    sampling_lb,
    zarankiewicz_upper,
)
from .certifier import ALL_THEOREMS, THM4_HI, THM4_LO, build_table, verify
from .errors import CrosscertError, DomainError, ParseError
from .rational import decimal_str, rat_str, rational_from_decimal
from .reporting import (
    OutputFormat,
    build_plot_grid,
    canonical_json_bytes,
    emit_plot_grid,
    emit_report,
    emit_table,
    report_to_json,
)

OUT_DIR_ENV = "CROSSCERT_OUT_DIR"

_EDGES = {
    "gallai": EdgeBoundKind.GALLAI,
    "ks": EdgeBoundKind.KOSTOCHKA_STIEBITZ,
    "mindeg": EdgeBoundKind.MIN_DEGREE,
}

_USAGE_BOUND = (
    "expected sampling:k=K:edge=gallai|ks|mindeg, prob:p=P:edge=..., "
    "window:lemC, or window:thm4"
)


def parse_bound_spec(text: str) -> BoundSpec:
    parts = text.split(":")
    kind = parts[0]
    if kind == "window":
        if len(parts) != 2:
            raise ParseError(f"bad bound spec {text!r}: {_USAGE_BOUND}")
        if parts[1] == "lemC":
            return SubdivisionWindow()
        if parts[1] == "thm4":
            return Thm4Window()
        raise ParseError(f"unknown window {parts[1]!r}: {_USAGE_BOUND}")
    options = {}
    for token in parts[1:]:
        if "=" not in token:
            raise ParseError(f"bad bound spec token {token!r}: {_USAGE_BOUND}")
        key, value = token.split("=", 1)
        if key in options:
            raise ParseError(f"duplicate option {key!r} in bound spec {text!r}")
        options[key] = value
    if kind == "sampling":
        if set(options) != {"k", "edge"}:
            raise ParseError(f"bad bound spec {text!r}: {_USAGE_BOUND}")
        if options["edge"] not in _EDGES:
            raise ParseError(f"unknown edge bound {options['edge']!r}: {_USAGE_BOUND}")
        try:
            k = int(options["k"])
        except ValueError as exc:
            raise ParseError(f"bad subgraph size {options['k']!r}") from exc
        return SamplingBound(k, _EDGES[options["edge"]])
    if kind == "prob":
        if set(options) != {"p", "edge"}:
            raise ParseError(f"bad bound spec {text!r}: {_USAGE_BOUND}")
        if options["edge"] not in _EDGES:
            raise ParseError(f"unknown edge bound {options['edge']!r}: {_USAGE_BOUND}")
        return ProbBound(rational_from_decimal(options["p"]), _EDGES[options["edge"]])
    raise ParseError(f"unknown bound kind {kind!r}: {_USAGE_BOUND}")


def _parse_p_overrides(tokens: list[str] | None, rmin: int, rmax: int) -> dict[int, Fraction] | None:
    """--p VALUE applies everywhere; --p R=VALUE overrides a single row."""
    if not tokens:
        return None
    overrides: dict[int, Fraction] = {}
    for token in tokens:
        if "=" in token:
            left, right = token.split("=", 1)
            try:
                r = int(left)
            except ValueError as exc:
                raise ParseError(f"bad row in --p override {token!r}") from exc
            overrides[r] = rational_from_decimal(right)
        else:
            value = rational_from_decimal(token)
            for r in range(rmin, rmax + 1):
                overrides.setdefault(r, value)
    return overrides


def _resolve_out(path_str: str) -> Path:
    path = Path(path_str)
    base = os.environ.get(OUT_DIR_ENV)
    if base and not path.is_absolute():
        return Path(base) / path
    return path


def _write_or_print(data: bytes, out: str | None) -> None:
    if out is None:
        sys.stdout.write(data.decode("utf-8"))
        if not data.endswith(b"\n"):
            sys.stdout.write("\n")
    else:
        path = _resolve_out(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(data)


def _cmd_table(args) -> int:
    overrides = _parse_p_overrides(args.p, args.rmin, args.rmax)
    rows = build_table(args.rmin, args.rmax, overrides)
    _write_or_print(emit_table(rows, OutputFormat(args.format)), args.out)
    return 0


def _cmd_verify(args) -> int:
    targets = list(ALL_THEOREMS) if args.target == "all" else [args.target]
    reports = [verify(t) for t in targets]
    if args.format == "json":
        if len(reports) == 1:
            data = canonical_json_bytes(report_to_json(reports[0]))
        else:
            data = canonical_json_bytes([report_to_json(r) for r in reports])
        _write_or_print(data, args.out)
    else:
        text = "".join(emit_report(r, OutputFormat.TEXT).decode("utf-8") for r in reports)
        _write_or_print(text.encode("utf-8"), args.out)
    if all(r.overall for r in reports):
        return 0
    for report in reports:
        for step in report.steps:
            if not step.passed:
                sys.stderr.write(f"failed: {report.theorem}: {step.description}\n")
                if step.witness is not None:
                    sys.stderr.write(f"  witness: {rat_str(step.witness)}\n")
    return 1


def _window_witness_lines(r: int, spec: BoundSpec, interval) -> list[str]:
    if isinstance(spec, SubdivisionWindow):
        return [f"orders r..r+4 for r={r}"]
    lo_scaled = THM4_LO * r
    hi_scaled = THM4_HI * r
    return [
        f"{interval.lo - 1} < {rat_str(lo_scaled)} <= {interval.lo}",
        f"{interval.hi} <= {rat_str(hi_scaled)} < {interval.hi + 1}",
    ]


def _cmd_exclude(args) -> int:
    spec = parse_bound_spec(args.bound)
    interval = certifier.excluded_orders(args.r, spec)
    print(str(interval))
    if interval.empty:
        return 0
    if isinstance(spec, (SubdivisionWindow, Thm4Window)):
        for line in _window_witness_lines(args.r, spec, interval):
            print(f"  {line}")
        return 0
    poly = bound_poly_in_n(args.r, spec)
    lo = interval.lo
    print(f"  margin({lo - 1}) = {rat_str(poly(lo - 1))} < 0")
    print(f"  margin({lo}) = {rat_str(poly(lo))} >= 0")
    if interval.hi is not None:
        hi = interval.hi
        print(f"  margin({hi}) = {rat_str(poly(hi))} >= 0")
        print(f"  margin({hi + 1}) = {rat_str(poly(hi + 1))} < 0")
    else:
        print("  unbounded above: positive slope in n")
    return 0


def _cmd_eval(args) -> int:
    spec = parse_bound_spec(args.bound)
    r, n = args.r, args.n
    target = zarankiewicz_upper(r)
    if isinstance(spec, (SubdivisionWindow, Thm4Window)):
        interval = certifier.excluded_orders(r, spec)
        inside = interval.contains(n)
        print(f"window = {interval}")
        print(f"excluded: {'true' if inside else 'false'}")
        return 0
    if args.m is not None:
        m = rational_from_decimal(args.m)
    else:
        m = edge_lower_bound(n, r, spec.edge)
    if isinstance(spec, SamplingBound):
        value = sampling_lb(n, m, spec.k)
    else:
        value = prob_lb(n, m, spec.p)
    print(f"m = {rat_str(m)}")
    print(f"value = {rat_str(value)} ({decimal_str(value)})")
    print(f"target = {rat_str(target)}")
    print(f"excluded: {'true' if value >= target else 'false'}")
    return 0


def _cmd_plot(args) -> int:
    grid = build_plot_grid(
        args.target,
        alpha_lo=None if args.alpha_min is None else rational_from_decimal(args.alpha_min),
        alpha_hi=None if args.alpha_max is None else rational_from_decimal(args.alpha_max),
        step=None if args.step is None else rational_from_decimal(args.step),
    )
    _write_or_print(emit_plot_grid(grid, OutputFormat(args.format)), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crosscert",
        description="Exact-rational certification of crossing-number order exclusions.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p_table = sub.add_parser("table", help="rebuild the exclusion table")
    p_table.add_argument("--rmin", type=int, default=15)
    p_table.add_argument("--rmax", type=int, default=26)
    p_table.add_argument("--format", choices=[f.value for f in OutputFormat], default="text")
    p_table.add_argument("--p", action="append", metavar="[R=]VALUE",
                         help="override inclusion probabilities (repeatable)")
    p_table.add_argument("--out", default=None)
    p_table.set_defaults(func=_cmd_table)

    p_verify = sub.add_parser("verify", help="run a named verification")
    p_verify.add_argument("target", choices=[*ALL_THEOREMS, "all"])
    p_verify.add_argument("--format", choices=["text", "json"], default="text")
    p_verify.add_argument("--out", default=None)
    p_verify.set_defaults(func=_cmd_verify)

    p_exclude = sub.add_parser("exclude", help="excluded orders for one bound")
    p_exclude.add_argument("--r", type=int, required=True)
    p_exclude.add_argument("--bound", required=True)
    p_exclude.set_defaults(func=_cmd_exclude)

    p_eval = sub.add_parser("eval", help="evaluate a bound at one order")
    p_eval.add_argument("--r", type=int, required=True)
    p_eval.add_argument("--n", type=int, required=True)
    p_eval.add_argument("--bound", required=True)
    p_eval.add_argument("--m", default=None, help="edge count override (decimal)")
    p_eval.set_defaults(func=_cmd_eval)

    p_plot = sub.add_parser("plot", help="export an exact sample grid")
    p_plot.add_argument("--target", required=True)
    p_plot.add_argument("--step", default=None)
    p_plot.add_argument("--alpha-min", default=None)
    p_plot.add_argument("--alpha-max", default=None)
    p_plot.add_argument("--format", choices=[f.value for f in OutputFormat], default="json")
    p_plot.add_argument("--out", default=None)
    p_plot.set_defaults(func=_cmd_plot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (DomainError, CrosscertError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
