"""Command-line front end: ``qcrossover breakeven|sweep|table|factory|distance|scenario``."""
from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional

from . import fault_tolerance as ft
from .errors import CrossoverError
from .formatting import format_mantissa
from .report import FORMATS, SweepSpec, export, preset_rows, run_sweep
from .scenarios import (
    DirectClassical, DirectQuantum, Scenario, builtin_scenarios, dump_scenario, get_scenario,
    load_scenario_file,
)
from .speedup import Amdahl, Fixed, Gustafson
from .units import Duration

EXIT_OK, EXIT_INVALID, EXIT_IO = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors are validation errors (exit 1); exit 2 is reserved for I/O
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _duration(text: str) -> Duration:
    try:
        return Duration.parse(text)
    except CrossoverError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _law(cls):
    def parse(text: str):
        try:
            alpha, procs = text.split(",")
            return cls(float(alpha), int(procs))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"expected ALPHA,P: {exc}")
    return parse


def _add_cost_flags(p: argparse.ArgumentParser, repeat: bool) -> None:
    p.add_argument("--scenario", metavar="NAME", help="built-in scenario name or scenario file path")
    p.add_argument("--tq", type=_duration, metavar="DUR", help="quantum primitive time, e.g. 17ms")
    p.add_argument("--tc", type=_duration, metavar="DUR", help="classical primitive time, e.g. 33ns")
    action = "append" if repeat else "store"
    p.add_argument("--degree", type=float, action=action, help="polynomial speedup degree (> 1)")
    p.add_argument("--s", dest="speedup", type=float, action=action, metavar="S", help="fixed classical speedup")
    p.add_argument("--amdahl", type=_law(Amdahl), action=action, metavar="ALPHA,P")
    p.add_argument("--gustafson", type=_law(Gustafson), action=action, metavar="ALPHA,P")
    p.add_argument("--rate", type=float, action=action, metavar="R", help="Toffoli rate factor (>= 1)")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--output", "-o", metavar="PATH", help="write to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qcrossover", description="Breakeven estimates for polynomial quantum speedups.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    _add_cost_flags(sub.add_parser("breakeven", help="breakeven point for one configuration"), repeat=False)
    _add_cost_flags(sub.add_parser("sweep", help="breakeven over a grid of degree, S and R"), repeat=True)

    table = sub.add_parser("table", help="reproduce a preset table")
    table.add_argument("--preset", choices=("table1", "table2"), required=True)
    table.add_argument("--format", choices=FORMATS, default="text")
    table.add_argument("--output", "-o", metavar="PATH")

    factory = sub.add_parser("factory", help="Toffoli factory cost on a hardware profile")
    factory.add_argument("--profile", default=ft.SUPERCONDUCTING.name)
    factory.add_argument("--distance", type=int, default=None)

    dist = sub.add_parser("distance", help="smallest code distance within a failure budget")
    dist.add_argument("--gates", type=int, required=True)
    dist.add_argument("--qubits", type=int, required=True)
    dist.add_argument("--profile", default=ft.SUPERCONDUCTING.name)
    dist.add_argument("--budget", type=float, default=ft.DEFAULT_BUDGET)
    dist.add_argument("--prefactor", type=float, default=ft.DEFAULT_PREFACTOR)

    scen = sub.add_parser("scenario", help="list, show or check scenarios")
    scen_sub = scen.add_subparsers(dest="action", required=True, parser_class=_Parser)
    scen_sub.add_parser("list")
    show = scen_sub.add_parser("show")
    show.add_argument("name")
    check = scen_sub.add_parser("check")
    check.add_argument("file")
    return parser


def _resolve_scenario(name: str) -> Scenario:
    if name in {s.name for s in builtin_scenarios()} or not os.path.exists(name):
        return get_scenario(name)
    return load_scenario_file(name)


def _costs(args):
    if args.scenario and (args.tq or args.tc):
        raise UsageError("use either --scenario or --tq/--tc, not both")
    if args.scenario:
        sc = _resolve_scenario(args.scenario)
        return sc, sc.degree
    if args.tq is None or args.tc is None:
        raise UsageError("need --scenario NAME or both --tq and --tc")
    sc = Scenario("custom", 1, DirectQuantum(args.tq), DirectClassical(args.tc))
    return sc, 2.0


def _listify(value) -> list:
    if value is None:
        return []
    return value if isinstance(value, list) else [value]


def _sweep_spec(args) -> SweepSpec:
    scenario, default_degree = _costs(args)
    pars = ([Fixed(s) for s in _listify(args.speedup)] + _listify(args.amdahl)
            + _listify(args.gustafson)) or [Fixed(1.0)]
    if not isinstance(args.speedup, list) and len(pars) > 1:
        raise UsageError("give only one of --s, --amdahl, --gustafson")
    return SweepSpec(
        scenario,
        degrees=tuple(_listify(args.degree) or [default_degree]),
        parallelisms=tuple(pars),
        rate_factors=tuple(_listify(args.rate) or [1.0]),
    )


def _emit(data: bytes, path: Optional[str], out) -> None:
    if path:
        with open(path, "wb") as fh:
            fh.write(data)
    else:
        out.write(data.decode("utf-8"))
        out.flush()


def _cmd_rows(args, out) -> None:
    if args.command == "table":
        rows = preset_rows(args.preset)
    else:
        rows = run_sweep(_sweep_spec(args))
    _emit(export(rows, args.format), args.output, out)


def _cmd_factory(args, out) -> None:
    profile = ft.get_profile(args.profile)
    est = ft.estimate_factory(profile, args.distance)
    distance = args.distance or profile.nominal_distance
    out.write(
        f"profile           {profile.name}\n"
        f"code distance     {distance}\n"
        f"toffoli time      {est.toffoli_time.seconds * 1e6:.6g} us (~{format_duration_us(est.toffoli_time)})\n"
        f"physical qubits   {est.physical_qubits}\n"
        f"spacetime volume  {est.spacetime_volume:.6g} qubitseconds\n"
        f"ec overhead       {est.overhead:.6g}\n"
    )


def format_duration_us(t: Duration) -> str:
    return f"{format_mantissa(t.seconds * 1e6)} us"


def _cmd_distance(args, out) -> None:
    profile = ft.get_profile(args.profile)
    sel = ft.select_code_distance(args.gates, args.qubits, profile, args.prefactor, args.budget)
    t_g = ft.toffoli_gate_time(profile, sel.distance)
    out.write(
        f"code distance            {sel.distance}\n"
        f"logical error per round  {sel.per_round_logical_error:.3e}\n"
        f"expected failures        {sel.expected_failures:.3e} (budget {sel.budget:g})\n"
        f"toffoli time             {t_g.seconds * 1e6:.6g} us\n"
    )


def _cmd_scenario(args, out) -> None:
    if args.action == "list":
        for sc in builtin_scenarios():
            out.write(f"{sc.name:<18} N={sc.problem_size:<5} t_q={sc.t_q.to_text():<8} "
                      f"t_c={sc.t_c.to_text():<6} degree={sc.degree:g}\n")
    elif args.action == "show":
        out.write(dump_scenario(_resolve_scenario(args.name)))
    else:
        sc = load_scenario_file(args.file)
        out.write(f"ok: {sc.name} (t_q={sc.t_q.to_text()}, t_c={sc.t_c.to_text()})\n")


def main(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command in ("breakeven", "sweep", "table"):
            _cmd_rows(args, out)
        elif args.command == "factory":
            _cmd_factory(args, out)
        elif args.command == "distance":
            _cmd_distance(args, out)
        else:
            _cmd_scenario(args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_INVALID
    except (CrossoverError, ValueError, OverflowError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID
    except OSError as exc:
        err.write(f"I/O error: {exc}\n")
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
