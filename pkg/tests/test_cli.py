import json
import subprocess
import sys

import pytest

from crosscert.certifier import build_table
from crosscert.cli import main, parse_bound_spec
from crosscert.bounds import EdgeBoundKind, ProbBound, SamplingBound, SubdivisionWindow, Thm4Window
from crosscert.errors import ParseError
from crosscert.reporting import OutputFormat, emit_table


def run_cli(*args: str) -> subprocess.CompletedProcess:
    return subprocess.run(
        [sys.executable, "-m", "crosscert.cli", *args],
        capture_output=True,
        text=True,
    )


def test_bound_grammar():
    assert parse_bound_spec("sampling:k=22:edge=gallai") == SamplingBound(22, EdgeBoundKind.GALLAI)
    assert parse_bound_spec("prob:p=0.5:edge=ks") == ProbBound("0.5", EdgeBoundKind.KOSTOCHKA_STIEBITZ)
    assert parse_bound_spec("window:lemC") == SubdivisionWindow()
    assert parse_bound_spec("window:thm4") == Thm4Window()
    for bad in ("sampling:k=22", "sampling:k=x:edge=gallai", "prob:p=0.5:edge=nope",
                "window:other", "foo:bar", "sampling:k=5:edge=ks:edge=ks"):
        with pytest.raises(ParseError):
            parse_bound_spec(bad)


def test_table_json_equals_library_serialization(capsys):
    assert main(["table", "--format", "json"]) == 0
    out = capsys.readouterr().out
    expected = emit_table(build_table(15, 26), OutputFormat.JSON).decode() + "\n"
    assert out == expected


def test_verify_thm6_passes():
    proc = run_cli("verify", "thm6")
    assert proc.returncode == 0
    assert "thm6: PASS" in proc.stdout
    assert "r=25: surviving orders are [48]" in proc.stdout


def test_verify_all_passes(capsys):
    assert main(["verify", "all", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert [report["theorem"] for report in payload] == ["thm2", "thm4", "thm6", "thm9"]
    assert all(report["overall"] for report in payload)


def test_exclude_prints_interval_and_witnesses(capsys):
    assert main(["exclude", "--r", "22", "--bound", "sampling:k=22:edge=gallai"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "[34,42]"
    assert lines[1].startswith("  margin(33) = ") and lines[1].endswith("< 0")
    assert lines[2].startswith("  margin(34) = ") and lines[2].endswith(">= 0")


def test_exclude_window(capsys):
    assert main(["exclude", "--r", "25", "--bound", "window:thm4"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "[31,44]"


def test_eval_marks_exclusion(capsys):
    assert main(["eval", "--bound", "prob:p=0.5:edge=ks", "--r", "26", "--n", "58"]) == 0
    out = capsys.readouterr().out
    assert "value = 10431/2 (5215.5)" in out
    assert "target = 5148" in out
    assert "excluded: true" in out


def test_eval_with_edge_override(capsys):
    assert main(["eval", "--bound", "sampling:k=12:edge=gallai", "--r", "15", "--n", "17", "--m", "131"]) == 0
    out = capsys.readouterr().out
    assert "excluded: true" in out


def test_exit_codes():
    assert run_cli("frobnicate").returncode == 2  # unknown verb
    assert main(["exclude", "--r", "22", "--bound", "nonsense:spec"]) == 2
    assert main(["exclude", "--r", "3", "--bound", "window:lemC"]) == 3  # domain error
    assert main(["eval", "--bound", "sampling:k=12:edge=gallai", "--r", "15", "--n", "40"]) == 3


def test_cli_output_is_deterministic():
    a = run_cli("table", "--format", "json")
    b = run_cli("table", "--format", "json")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_plot_writes_into_env_dir(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("CROSSCERT_OUT_DIR", str(tmp_path))
    assert main(["plot", "--target", "p12-parts", "--step", "0.05", "--out", "grid.json"]) == 0
    capsys.readouterr()
    written = tmp_path / "grid.json"
    assert written.exists()
    from crosscert.reporting import parse_grid_json

    grid = parse_grid_json(written.read_bytes())
    assert grid.target == "p12-parts"


def test_table_p_override(capsys):
    assert main(["table", "--rmin", "25", "--rmax", "25", "--format", "csv", "--p", "25=0.52"]) == 0
    out = capsys.readouterr().out
    assert "13/25" in out


def test_verify_out_writes_report_file(tmp_path, capsys):
    target = tmp_path / "thm9.json"
    assert main(["verify", "thm9", "--format", "json", "--out", str(target)]) == 0
    capsys.readouterr()
    from crosscert.reporting import parse_report_json

    report = parse_report_json(target.read_bytes())
    assert report.theorem == "thm9" and report.overall


def test_verify_failure_exits_one(capsys, monkeypatch):
    from fractions import Fraction

    import crosscert.cli as cli_module
    from crosscert.certifier import Report, ReportStep

    failing = Report("thm9")
    failing.steps.append(
        ReportStep("synthetic failing step", False, witness=Fraction(7, 2))
    )
    monkeypatch.setattr(cli_module, "verify", lambda target: failing)
    assert main(["verify", "thm9"]) == 1
    captured = capsys.readouterr()
    assert "thm9: FAIL" in captured.out
    assert "failed: thm9: synthetic failing step" in captured.err
    assert "witness: 7/2" in captured.err
