"""Parameter sweeps over (degree, S, R), the two preset tables, and export."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, List, Sequence, Tuple, Union

from .errors import CrossoverError, DomainError
from .formatting import format_count, format_duration
from .scenarios import Scenario, get_scenario
from .speedup import Fixed, ParallelismConfig, SpeedupQuery, breakeven, check_degree, resolve_speedup
from .units import Duration

MAX_ROWS = 10**6
CSV_HEADER = ("scenario", "degree", "S", "R", "M_star", "T_star_seconds")
FORMATS = ("text", "csv", "json-lines")
PRESET_SCENARIOS = ("lower-bound-sc", "sk-annealing-sc")


class SweepCellError(DomainError):
    """A single sweep cell failed; carries the cell coordinates."""

    def __init__(self, scenario: str, degree: float, speedup: float, rate: float, cause: Exception):
        self.cell = (scenario, degree, speedup, rate)
        super().__init__(
            f"cell scenario={scenario} degree={degree!r} S={speedup!r} R={rate!r}: {cause}"
        )


@dataclass(frozen=True)
class SweepSpec:
    scenario: Scenario
    degrees: Tuple[float, ...]
    parallelisms: Tuple[ParallelismConfig, ...] = (Fixed(1.0),)
    rate_factors: Tuple[float, ...] = (1.0,)

    def __post_init__(self):
        if isinstance(self.scenario, str):
            object.__setattr__(self, "scenario", get_scenario(self.scenario))
        for name in ("degrees", "parallelisms", "rate_factors"):
            values = tuple(getattr(self, name))
            if not values:
                raise DomainError(f"sweep {name} must not be empty")
            object.__setattr__(self, name, values)
        object.__setattr__(self, "degrees", tuple(check_degree(d) for d in self.degrees))
        object.__setattr__(self, "parallelisms", tuple(
            p if not isinstance(p, (int, float)) else Fixed(p) for p in self.parallelisms))
        if len(self) > MAX_ROWS:
            raise DomainError(f"sweep has {len(self)} cells, limit is {MAX_ROWS}")

    def __len__(self) -> int:
        return len(self.degrees) * len(self.parallelisms) * len(self.rate_factors)


@dataclass(frozen=True)
class TableRow:
    scenario: str
    degree: float
    speedup: float
    rate_factor: float
    calls: float
    runtime: Duration

    @property
    def calls_display(self) -> str:
        return format_count(self.calls)

    @property
    def runtime_display(self) -> str:
        return format_duration(self.runtime)

    def as_record(self) -> dict:
        return {
            "scenario": self.scenario,
            "degree": self.degree,
            "S": self.speedup,
            "R": self.rate_factor,
            "M_star": self.calls,
            "T_star_seconds": self.runtime.seconds,
        }


def run_sweep(spec: SweepSpec) -> List[TableRow]:
    """Breakeven for every cell, degree-major, then S, then R."""
    sc = spec.scenario
    t_q, t_c = sc.t_q, sc.t_c
    rows = []
    for degree in spec.degrees:
        for par in spec.parallelisms:
            s = resolve_speedup(par)
            for rate in spec.rate_factors:
                try:
                    point = breakeven(SpeedupQuery(t_q, t_c, degree, par, rate))
                except (CrossoverError, OverflowError) as exc:
                    raise SweepCellError(sc.name, degree, s, rate, exc) from exc
                rows.append(TableRow(sc.name, degree, s, rate, point.calls, point.runtime))
    return rows


def preset_rows(preset: str) -> List[TableRow]:
    """Preset grids: ``table1`` (degree x S at R=1) or ``table2`` (R at degree 2, S=1e3)."""
    if preset == "table1":
        axes = dict(degrees=(2, 3, 4), parallelisms=(1.0, 1e3, 1e6), rate_factors=(1.0,))
    elif preset == "table2":
        axes = dict(degrees=(2,), parallelisms=(1e3,), rate_factors=(10.0, 100.0, 1000.0))
    else:
        raise DomainError(f"unknown preset {preset!r} (choose table1 or table2)")
    rows = []
    for name in PRESET_SCENARIOS:
        rows.extend(run_sweep(SweepSpec(get_scenario(name), **axes)))
    return rows


def _fmt_real(x: float) -> str:
    return f"{x:g}"


def render_text(rows: Sequence[TableRow]) -> str:
    header = ("scenario", "degree", "S", "R", "iterations M", "runtime T*")
    body = [(r.scenario, _fmt_real(r.degree), _fmt_real(r.speedup), _fmt_real(r.rate_factor),
             r.calls_display, r.runtime_display) for r in rows]
    widths = [max(len(row[i]) for row in [header, *body]) for i in range(len(header))]
    lines = []
    for i, row in enumerate([header, *body]):
        cells = [c.ljust(w) if j == 0 else c.rjust(w) for j, (c, w) in enumerate(zip(row, widths))]
        lines.append("  ".join(cells).rstrip())
        if i == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def render_csv(rows: Iterable[TableRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in rows:
        rec = r.as_record()
        writer.writerow([rec["scenario"]] + [repr(float(rec[k])) for k in CSV_HEADER[1:]])
    return buf.getvalue()


def render_json_lines(rows: Iterable[TableRow]) -> str:
    return "".join(json.dumps(r.as_record()) + "\n" for r in rows)


def preset_table(preset: str, fmt: str = "text") -> str:
    return render(preset_rows(preset), fmt)


def render(rows: Sequence[TableRow], fmt: str = "text") -> str:
    if fmt == "text":
        return render_text(rows)
    if fmt == "csv":
        return render_csv(rows)
    if fmt == "json-lines":
        return render_json_lines(rows)
    raise DomainError(f"unknown export format {fmt!r} (choose from {', '.join(FORMATS)})")


def export(rows: Sequence[TableRow], fmt: str = "text",
           destination: Union[str, Path, IO[bytes], None] = None) -> bytes:
    """Render ``rows`` as UTF-8 bytes, optionally writing them to a path or binary stream.

    Write failures raise ``OSError`` whose message names the destination.
    """
    data = render(rows, fmt).encode("utf-8")
    if destination is None:
        return data
    if isinstance(destination, (str, Path)):
        try:
            Path(destination).write_bytes(data)
        except OSError as exc:
            raise OSError(exc.errno, f"cannot write {destination}: {exc.strerror or exc}") from exc
    else:
        destination.write(data)
    return data
