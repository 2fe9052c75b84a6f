import csv
import io
import json

import pytest

from qcrossover import (
    Amdahl, DomainError, SpeedupQuery, SweepSpec, breakeven, export, get_scenario, preset_rows,
    preset_table, run_sweep,
)
from qcrossover.report import SweepCellError, render_text


def test_sweep_order_and_values():
    sc = get_scenario("lower-bound-sc")
    rows = run_sweep(SweepSpec(sc, degrees=(2, 3, 4), parallelisms=(1.0, 1e3, 1e6)))
    assert len(rows) == 9
    assert [(r.degree, r.speedup) for r in rows[:4]] == [(2, 1), (2, 1e3), (2, 1e6), (3, 1)]
    for r in rows:
        p = breakeven(SpeedupQuery(sc.t_q, sc.t_c, r.degree, r.speedup, r.rate_factor))
        assert (r.calls, r.runtime) == (p.calls, p.runtime)


def test_sweep_rates():
    rows = run_sweep(SweepSpec(get_scenario("sk-annealing-sc"), (2,), (1e3,), (10, 100, 1000)))
    assert [r.runtime_display for r in rows] == ["8.8 years", "32 days", "7.7 hours"]


def test_sweep_accepts_parallelism_laws():
    rows = run_sweep(SweepSpec("sk-annealing-sc", (2,), (Amdahl(0.0, 1000),)))
    assert rows[0].speedup == 1000


@pytest.mark.parametrize("kw", [dict(degrees=()), dict(degrees=(2,), parallelisms=()),
                                dict(degrees=(2,), rate_factors=())])
def test_sweep_rejects_empty_axes(kw):
    with pytest.raises(DomainError):
        SweepSpec(get_scenario("lower-bound-sc"), **kw)


def test_sweep_row_limit():
    with pytest.raises(DomainError, match="limit"):
        SweepSpec("lower-bound-sc", tuple(2 + i * 1e-3 for i in range(1001)),
                  tuple(float(1 + i) for i in range(1000)), (1.0, 2.0))


def test_sweep_cell_error_names_cell():
    with pytest.raises(SweepCellError) as exc:
        run_sweep(SweepSpec("sk-annealing-sc", (2.0, 1.0001), (1.0,), (1.0,)))
    assert exc.value.cell[1] == 1.0001
    assert "degree=1.0001" in str(exc.value)


def test_preset_sizes():
    assert len(preset_rows("table1")) == 18
    assert len(preset_rows("table2")) == 6
    with pytest.raises(DomainError):
        preset_rows("table3")


def test_preset_cells():
    t1 = {(r.scenario, r.degree, r.speedup): r for r in preset_rows("table1")}
    r = t1[("lower-bound-sc", 2, 1)]
    assert (r.calls_display, r.runtime_display) == ("5.2×10^5", "2.4 hours")
    r = t1[("sk-annealing-sc", 3, 1)]
    assert (r.calls_display, r.runtime_display) == ("7.9×10^3", "58 minutes")
    t2 = {(r.scenario, r.rate_factor): r for r in preset_rows("table2")}
    r = t2[("lower-bound-sc", 1000)]
    assert (r.calls_display, r.runtime_display) == ("5.2×10^5", "8.8 seconds")


def test_csv_export():
    rows = preset_rows("table1")
    text = export(rows[:1], "csv").decode()
    assert text.splitlines() == [
        "scenario,degree,S,R,M_star,T_star_seconds",
        f"lower-bound-sc,2.0,1.0,1.0,{rows[0].calls!r},{rows[0].runtime.seconds!r}",
    ]
    parsed = list(csv.DictReader(io.StringIO(export(rows, "csv").decode())))
    assert len(parsed) == 18
    assert float(parsed[5]["M_star"]) == rows[5].calls
    assert len(export(preset_rows("table2"), "csv").decode().splitlines()) == 7


def test_json_lines_export():
    rows = preset_rows("table2")
    lines = export(rows, "json-lines").decode().splitlines()
    assert len(lines) == 6
    obj = json.loads(lines[0])
    assert list(obj) == ["scenario", "degree", "S", "R", "M_star", "T_star_seconds"]
    assert obj["T_star_seconds"] == rows[0].runtime.seconds


def test_text_export_aligned():
    text = render_text(preset_rows("table2"))
    lines = text.splitlines()
    assert len(lines) == 8
    assert len({len(line) for line in lines[:2]}) == 1


@pytest.mark.parametrize("fmt", ["text", "csv", "json-lines"])
def test_export_deterministic(fmt):
    assert export(preset_rows("table1"), fmt) == export(preset_rows("table1"), fmt)


def test_export_to_path_and_stream(tmp_path):
    rows = preset_rows("table2")
    path = tmp_path / "t2.csv"
    data = export(rows, "csv", path)
    assert path.read_bytes() == data
    buf = io.BytesIO()
    export(rows, "csv", buf)
    assert buf.getvalue() == data


def test_export_write_failure_names_path(tmp_path):
    target = tmp_path / "missing-dir" / "out.csv"
    with pytest.raises(OSError, match="missing-dir"):
        export(preset_rows("table2"), "csv", target)


def test_export_unknown_format():
    with pytest.raises(DomainError):
        export(preset_rows("table2"), "xml")


def test_preset_table_text():
    assert "880 millennia" in preset_table("table1")
