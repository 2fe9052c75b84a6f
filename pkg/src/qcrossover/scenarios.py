"""Named pairings of quantum and classical primitive costs, and their YAML form.

A scenario document looks like::

    name: sk-annealing-sc
    problem_size: 512
    degree: 2
    quantum:
      t_q: 440ms            # or: toffoli_count, profile, distance (optional)
    classical:
      t_c: 7ns              # or: cycles, clock_hz
    notes: free text
    expected_calls: 1.0e+6  # optional, informational only
    profiles:               # optional extra hardware profiles, keyed by name
      my-device:
        cycle_time: 2us
        ...

Durations are strings with an ns/us/ms/s suffix, or plain numbers of seconds.
"""
from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import yaml

from .errors import DomainError, ScenarioParseError, ScenarioValidationError
from .fault_tolerance import (
    BUILTIN_PROFILES,
    DEFAULT_CLOCK_HZ,
    ION_TRAP,
    HardwareProfile,
    classical_primitive_time,
    quantum_primitive_time,
    toffoli_gate_time,
)
from .speedup import check_degree
from .units import Duration


@dataclass(frozen=True)
class DirectQuantum:
    t_q: Duration


@dataclass(frozen=True)
class ToffoliCount:
    toffoli_count: int
    profile: str
    distance: Optional[int] = None


@dataclass(frozen=True)
class DirectClassical:
    t_c: Duration


@dataclass(frozen=True)
class CycleCount:
    cycles: int
    clock_hz: float = DEFAULT_CLOCK_HZ


QuantumCost = Union[DirectQuantum, ToffoliCount]
ClassicalCost = Union[DirectClassical, CycleCount]


@dataclass(frozen=True)
class Scenario:
    name: str
    problem_size: int
    quantum_cost: QuantumCost
    classical_cost: ClassicalCost
    degree: float = 2.0
    notes: str = ""
    expected_calls: Optional[float] = None
    profiles: Tuple[HardwareProfile, ...] = field(default=())

    def profile(self, name: str) -> HardwareProfile:
        for p in self.profiles:
            if p.name == name:
                return p
        try:
            return BUILTIN_PROFILES[name]
        except KeyError:
            raise ScenarioValidationError("quantum.profile", f"unknown hardware profile {name!r}") from None

    @property
    def t_q(self) -> Duration:
        cost = self.quantum_cost
        if isinstance(cost, DirectQuantum):
            return cost.t_q
        t_g = toffoli_gate_time(self.profile(cost.profile), cost.distance)
        return quantum_primitive_time(cost.toffoli_count, t_g)

    @property
    def t_c(self) -> Duration:
        cost = self.classical_cost
        if isinstance(cost, DirectClassical):
            return cost.t_c
        return classical_primitive_time(cost.cycles, cost.clock_hz)


def sk_toffoli_count(n: int) -> int:
    """Toffolis per quantum-walk annealing step on an ``n``-spin SK instance (``5n``, log term dropped)."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise DomainError(f"problem size must be an integer >= 2, got {n!r}")
    return 5 * n


def grover_min_gates(n: int) -> int:
    """Floor on Toffolis per primitive call for an ``n``-qubit problem."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"problem size must be a positive integer, got {n!r}")
    return n


def builtin_scenarios() -> List[Scenario]:
    return [
        Scenario(
            name="lower-bound-sc",
            problem_size=100,
            quantum_cost=DirectQuantum(Duration.parse("17ms")),
            classical_cost=DirectClassical(Duration.parse("33ns")),
            notes="N=100 primitive: G >= N Toffolis at 170 us each vs one 3 GHz cycle per Toffoli.",
        ),
        Scenario(
            name="sk-annealing-sc",
            problem_size=512,
            quantum_cost=DirectQuantum(Duration.parse("440ms")),
            classical_cost=DirectClassical(Duration.parse("7ns")),
            notes="Sherrington-Kirkpatrick simulated annealing, N=512: ~2.6e3 Toffolis per "
                  "quantum walk step vs ~7 ns per classical annealing step.",
        ),
        Scenario(
            name="lower-bound-ion",
            problem_size=100,
            quantum_cost=ToffoliCount(grover_min_gates(100), ION_TRAP.name),
            classical_cost=DirectClassical(Duration.parse("33ns")),
            notes="N=100 lower bound on a networked ion-trap surface code (100 us rounds).",
        ),
    ]


def get_scenario(name: str) -> Scenario:
    for s in builtin_scenarios():
        if s.name == name:
            return s
    known = ", ".join(s.name for s in builtin_scenarios())
    raise ScenarioValidationError("name", f"unknown scenario {name!r} (known: {known})")


# -- document parsing ---------------------------------------------------------------

_TOP_KEYS = {"name", "problem_size", "degree", "quantum", "classical", "notes", "expected_calls", "profiles"}
_REQUIRED = ("name", "problem_size", "quantum", "classical")
_PROFILE_DURATIONS = ("cycle_time", "decode_latency", "two_qubit_gate_time", "measurement_time")
_PROFILE_KEYS = set(_PROFILE_DURATIONS) | {
    "gate_prefactor", "physical_error_rate", "threshold", "nominal_distance"}


def _duration(value, where: str, positive: bool = True) -> Duration:
    try:
        if isinstance(value, str):
            d = Duration.parse(value)
        elif isinstance(value, (int, float)) and not isinstance(value, bool):
            d = Duration(value)
        else:
            raise DomainError(f"expected a duration, got {value!r}")
    except DomainError as exc:
        raise ScenarioValidationError(where, str(exc)) from None
    if positive and d.seconds <= 0:
        raise ScenarioValidationError(where, "duration must be strictly positive")
    return d


def _int(value, where: str, minimum: int = 1) -> int:
    if isinstance(value, float) and value.is_integer():
        value = int(value)
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise ScenarioValidationError(where, f"expected an integer >= {minimum}, got {value!r}")
    return value


def _real(value, where: str) -> float:
    if isinstance(value, str):
        # YAML 1.1 reads "1e6" (no dot) as a string
        try:
            value = float(value)
        except ValueError:
            pass
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise ScenarioValidationError(where, f"expected a finite real number, got {value!r}")
    return float(value)


def _mapping(value, where: str) -> dict:
    if not isinstance(value, dict):
        raise ScenarioValidationError(where, f"expected a mapping, got {type(value).__name__}")
    return value


def _reject_unknown(doc: dict, allowed: set, where: str) -> None:
    extra = sorted(set(doc) - allowed, key=str)
    if extra:
        prefix = f"{where}." if where else ""
        raise ScenarioValidationError(f"{prefix}{extra[0]}", "unknown field")


def _parse_profile(name: str, doc) -> HardwareProfile:
    where = f"profiles.{name}"
    doc = _mapping(doc, where)
    _reject_unknown(doc, _PROFILE_KEYS, where)
    if "cycle_time" not in doc:
        raise ScenarioValidationError(f"{where}.cycle_time", "missing required field")
    kwargs = {}
    for key, value in doc.items():
        if key in _PROFILE_DURATIONS:
            kwargs[key] = _duration(value, f"{where}.{key}", positive=key == "cycle_time")
        elif key == "nominal_distance":
            kwargs[key] = _int(value, f"{where}.{key}", minimum=3)
        else:
            kwargs[key] = _real(value, f"{where}.{key}")
    try:
        return HardwareProfile(name=str(name), **kwargs)
    except DomainError as exc:
        raise ScenarioValidationError(where, str(exc)) from None


def _parse_quantum(doc, profiles: Dict[str, HardwareProfile]) -> QuantumCost:
    doc = _mapping(doc, "quantum_cost")
    if "t_q" in doc:
        _reject_unknown(doc, {"t_q"}, "quantum_cost")
        return DirectQuantum(_duration(doc["t_q"], "quantum_cost.t_q"))
    _reject_unknown(doc, {"toffoli_count", "profile", "distance"}, "quantum_cost")
    for key in ("toffoli_count", "profile"):
        if key not in doc:
            raise ScenarioValidationError(f"quantum_cost.{key}", "missing required field (or give t_q)")
    profile = doc["profile"]
    if not isinstance(profile, str):
        raise ScenarioValidationError("quantum_cost.profile", f"expected a profile name, got {profile!r}")
    if profile not in profiles and profile not in BUILTIN_PROFILES:
        raise ScenarioValidationError("quantum_cost.profile", f"unknown hardware profile {profile!r}")
    distance = doc.get("distance")
    if distance is not None:
        distance = _int(distance, "quantum_cost.distance", minimum=3)
    return ToffoliCount(_int(doc["toffoli_count"], "quantum_cost.toffoli_count"), profile, distance)


def _parse_classical(doc) -> ClassicalCost:
    doc = _mapping(doc, "classical_cost")
    if "t_c" in doc:
        _reject_unknown(doc, {"t_c"}, "classical_cost")
        return DirectClassical(_duration(doc["t_c"], "classical_cost.t_c"))
    _reject_unknown(doc, {"cycles", "clock_hz"}, "classical_cost")
    if "cycles" not in doc:
        raise ScenarioValidationError("classical_cost.cycles", "missing required field (or give t_c)")
    clock = _real(doc.get("clock_hz", DEFAULT_CLOCK_HZ), "classical_cost.clock_hz")
    if clock <= 0:
        raise ScenarioValidationError("classical_cost.clock_hz", "must be positive")
    return CycleCount(_int(doc["cycles"], "classical_cost.cycles"), clock)


def scenario_from_dict(doc) -> Scenario:
    """Validate an already-parsed scenario mapping."""
    doc = _mapping(doc, "document")
    _reject_unknown(doc, _TOP_KEYS, "")
    for key in _REQUIRED:
        if key not in doc:
            raise ScenarioValidationError(key, "missing required field")
    name = doc["name"]
    if not isinstance(name, str) or not name.strip():
        raise ScenarioValidationError("name", "expected a non-empty string")

    profiles: Dict[str, HardwareProfile] = {}
    for pname, pdoc in _mapping(doc.get("profiles") or {}, "profiles").items():
        profiles[str(pname)] = _parse_profile(str(pname), pdoc)

    try:
        degree = check_degree(_real(doc.get("degree", 2.0), "degree"))
    except DomainError as exc:
        raise ScenarioValidationError("degree", str(exc)) from None
    notes = doc.get("notes") or ""
    if not isinstance(notes, str):
        raise ScenarioValidationError("notes", "expected text")
    expected = doc.get("expected_calls")
    if expected is not None:
        expected = _real(expected, "expected_calls")
        if expected <= 0:
            raise ScenarioValidationError("expected_calls", "must be positive")

    scenario = Scenario(
        name=name,
        problem_size=_int(doc["problem_size"], "problem_size"),
        quantum_cost=_parse_quantum(doc["quantum"], profiles),
        classical_cost=_parse_classical(doc["classical"]),
        degree=degree,
        notes=notes,
        expected_calls=expected,
        profiles=tuple(profiles.values()),
    )
    # resolution must succeed for the scenario to be usable
    for attr, where in (("t_q", "quantum_cost"), ("t_c", "classical_cost")):
        try:
            value = getattr(scenario, attr)
        except (DomainError, OverflowError) as exc:
            raise ScenarioValidationError(where, str(exc)) from None
        if value.seconds <= 0:
            raise ScenarioValidationError(where, "resolved duration must be strictly positive")
    return scenario


def load_scenario(document: str) -> Scenario:
    """Parse and validate a YAML scenario document."""
    try:
        doc = yaml.safe_load(document)
    except yaml.YAMLError as exc:
        raise ScenarioParseError(f"malformed scenario document: {exc}") from None
    if doc is None:
        raise ScenarioParseError("empty scenario document")
    return scenario_from_dict(doc)


def load_scenario_file(path: Union[str, Path]) -> Scenario:
    """Read a scenario file. ``OSError`` propagates for unreadable paths."""
    return load_scenario(Path(path).read_text(encoding="utf-8"))


def _number(x: float):
    return int(x) if float(x).is_integer() and abs(x) < 2**53 else x


def scenario_to_dict(scenario: Scenario) -> dict:
    q = scenario.quantum_cost
    if isinstance(q, DirectQuantum):
        quantum = {"t_q": q.t_q.to_text()}
    else:
        quantum = {"toffoli_count": q.toffoli_count, "profile": q.profile}
        if q.distance is not None:
            quantum["distance"] = q.distance
    c = scenario.classical_cost
    if isinstance(c, DirectClassical):
        classical = {"t_c": c.t_c.to_text()}
    else:
        classical = {"cycles": c.cycles, "clock_hz": _number(c.clock_hz)}

    doc = {
        "name": scenario.name,
        "problem_size": scenario.problem_size,
        "degree": _number(scenario.degree),
        "quantum": quantum,
        "classical": classical,
    }
    if scenario.notes:
        doc["notes"] = scenario.notes
    if scenario.expected_calls is not None:
        doc["expected_calls"] = scenario.expected_calls
    if scenario.profiles:
        doc["profiles"] = {}
        for p in scenario.profiles:
            entry = {}
            for f in dataclasses.fields(p):
                if f.name == "name":
                    continue
                value = getattr(p, f.name)
                entry[f.name] = value.to_text() if isinstance(value, Duration) else _number(value)
            doc["profiles"][p.name] = entry
    return doc


def dump_scenario(scenario: Scenario) -> str:
    """Serialize to a YAML document accepted by :func:`load_scenario`."""
    return yaml.safe_dump(scenario_to_dict(scenario), sort_keys=False, allow_unicode=True)
