import csv
import io
from fractions import Fraction
from pathlib import Path

import pytest

from crosscert.certifier import build_table, build_table_row, verify
from crosscert.errors import DomainError, ParseError
from crosscert.reporting import (
    OutputFormat,
    build_plot_grid,
    emit_plot_grid,
    emit_report,
    emit_table,
    parse_grid_json,
    parse_report_json,
    parse_table_json,
)

F = Fraction

GOLDEN = Path(__file__).parent / "golden" / "table_body.txt"


def test_text_table_matches_golden_file():
    data = emit_table(build_table(15, 26), OutputFormat.TEXT)
    assert data == GOLDEN.read_bytes()


def test_text_table_is_deterministic():
    rows = build_table(15, 26)
    assert emit_table(rows, OutputFormat.TEXT) == emit_table(list(rows), OutputFormat.TEXT)


def test_csv_shape():
    data = emit_table(build_table(15, 26), OutputFormat.CSV).decode("utf-8")
    parsed = list(csv.reader(io.StringIO(data)))
    assert len(parsed) == 13  # header + 12 data lines
    assert all(len(line) == 10 for line in parsed)
    assert parsed[0][0] == "r" and parsed[1][2] == "[15,19]"


def test_json_round_trip_single_row():
    row = build_table_row(25)
    data = emit_table([row], OutputFormat.JSON)
    assert parse_table_json(data) == [row]


def test_json_round_trip_full_table():
    rows = build_table(15, 26)
    assert parse_table_json(emit_table(rows, OutputFormat.JSON)) == rows


def test_json_is_canonical_and_injective():
    rows = build_table(15, 26)
    blobs = {emit_table([row], OutputFormat.JSON) for row in rows}
    assert len(blobs) == len(rows)
    blob = emit_table(rows, OutputFormat.JSON)
    assert b" " not in blob and b"\n" not in blob


def test_empty_table_rejected():
    with pytest.raises(DomainError):
        emit_table([], OutputFormat.TEXT)


def test_table_schema_violations_name_the_field():
    with pytest.raises(ParseError) as err:
        parse_table_json(b'{"schema":"table-v0","rows":[]}')
    assert "schema" in str(err.value)
    good = emit_table([build_table_row(15)], OutputFormat.JSON).decode()
    broken = good.replace('"cr_upper":441', '"cr_upper":"441"')
    with pytest.raises(ParseError) as err:
        parse_table_json(broken.encode())
    assert "cr_upper" in str(err.value) or "rows[0]" in str(err.value)


@pytest.mark.parametrize("theorem", ["thm2", "thm4", "thm6", "thm9"])
def test_report_round_trip(theorem):
    report = verify(theorem)
    parsed = parse_report_json(emit_report(report, OutputFormat.JSON))
    assert parsed.theorem == report.theorem
    assert parsed.overall == report.overall
    assert parsed.steps == report.steps
    assert parsed.discrepancies == report.discrepancies


def test_report_text_contains_verdicts():
    text = emit_report(verify("thm6"), OutputFormat.TEXT).decode()
    assert text.startswith("thm6: PASS")
    assert "r=25: surviving orders are [48]" in text
    assert "discrepancies" in text


# -- plot grids -------------------------------------------------------------------


def test_contour_grid_feasibility_corners():
    grid = build_plot_grid("f-of-alpha-k", step=F(1, 100))
    by_label = dict(grid.rows)
    alphas = []
    x = grid.alpha_axis.lo
    while x <= grid.alpha_axis.hi:
        alphas.append(x)
        x += grid.step
    idx_123 = alphas.index(F(123, 100))
    idx_177 = alphas.index(F(177, 100))
    assert by_label["k=12"][idx_123] >= 0  # inside the feasible oval
    assert by_label["k=12"][idx_177] < 0
    # the k=19 profile dies out between 1.7689 and 1.77 (root ~1.768923)
    assert by_label["k=19"][idx_177] < 0


def test_contour_grid_sign_boundary_k19():
    from crosscert.bounds import gallai_window_quartic

    quartic = gallai_window_quartic(19)
    assert quartic(F(17689, 10000)) > 0
    assert quartic(F(177, 100)) < 0


def test_parts_grid_straddles_the_boundary():
    from crosscert.certifier import recomputed_parts

    top = recomputed_parts(19)[4]
    boundary = F(17689, 10000)
    assert top(boundary - F(1, 10000)) > 0
    assert top(boundary + F(1, 10000)) < 0
    grid = build_plot_grid("p19-parts", alpha_lo=boundary - F(1, 10000),
                           alpha_hi=boundary + F(1, 10000), step=F(1, 10000))
    q4 = dict(grid.rows)["q_4"]
    assert q4[0] > 0 > q4[-1]


def test_grid_round_trip_and_shape():
    grid = build_plot_grid("p12-parts", step=F(1, 100))
    parsed = parse_grid_json(emit_plot_grid(grid, OutputFormat.JSON))
    assert parsed == grid
    assert [label for label, _ in grid.rows] == ["q_4", "q_3", "q_2", "q_1"]


def test_grid_rejects_bad_step_and_target():
    with pytest.raises(DomainError):
        build_plot_grid("p19-parts", step=F(0))
    with pytest.raises(DomainError):
        build_plot_grid("p20-parts")


def test_grid_csv_and_text_render():
    grid = build_plot_grid("p15-parts", step=F(1, 10))
    blob = emit_plot_grid(grid, OutputFormat.CSV).decode()
    assert blob.splitlines()[0].startswith("label,")
    text = emit_plot_grid(grid, OutputFormat.TEXT).decode()
    assert text.startswith("target p15-parts")
