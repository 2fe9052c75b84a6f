"""Error-corrected Toffoli costs derived from physical hardware parameters.

Gate time follows ``t_G = C_G * (d_code * tau_s + l_r)``: each Toffoli takes
``C_G`` blocks of ``d_code`` syndrome-extraction rounds plus a decoding latency.
Logical errors are suppressed as ``A * (p / p_th) ** ((d_code + 1) / 2)`` per
logical qubit per round.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict

from .errors import DistanceSelectionError, DomainError
from .units import Duration, DurationLike, as_duration, as_seconds

#: Largest code distance the selector will consider.
MAX_DISTANCE = 99
#: Default logical-error prefactor ``A`` and failure budget.
DEFAULT_PREFACTOR = 0.1
DEFAULT_BUDGET = 0.01
#: 3 GHz, i.e. 330 ps per clock cycle.
DEFAULT_CLOCK_HZ = 3e9


def _check_distance(distance, odd: bool = False) -> int:
    if isinstance(distance, bool) or not isinstance(distance, int):
        raise DomainError(f"code distance must be an integer, got {distance!r}")
    if distance < 3:
        raise DomainError(f"code distance must be >= 3, got {distance}")
    if odd and distance % 2 == 0:
        raise DomainError(f"code distance must be odd, got {distance}")
    return distance


@dataclass(frozen=True)
class HardwareProfile:
    """Physical-layer timing and noise for one qubit technology.

    ``cycle_time`` is the effective syndrome-extraction round, including the
    decoder's per-round throughput. ``decode_latency`` is the extra latency paid
    once per gate. ``two_qubit_gate_time`` and ``measurement_time`` are kept for
    reference; only the latter enters a calculation (the dimensionless overhead).
    """

    name: str
    cycle_time: Duration
    decode_latency: Duration = Duration(0.0)
    gate_prefactor: float = 5.5
    two_qubit_gate_time: Duration = Duration(0.0)
    measurement_time: Duration = Duration(0.0)
    physical_error_rate: float = 1e-3
    threshold: float = 1e-2
    nominal_distance: int = 30

    def __post_init__(self):
        for name in ("cycle_time", "decode_latency", "two_qubit_gate_time", "measurement_time"):
            try:
                object.__setattr__(self, name, as_duration(getattr(self, name)))
            except DomainError as exc:
                raise DomainError(f"{name}: {exc}") from None
        if not isinstance(self.name, str) or not self.name:
            raise DomainError("profile name must be a non-empty string")
        if self.cycle_time.seconds <= 0:
            raise DomainError("cycle_time must be strictly positive")
        if not (isinstance(self.gate_prefactor, (int, float)) and 1 <= self.gate_prefactor < math.inf):
            raise DomainError(f"gate_prefactor must be >= 1, got {self.gate_prefactor!r}")
        p, p_th = self.physical_error_rate, self.threshold
        if not 0 < p < p_th < 1:
            raise DomainError(f"need 0 < physical_error_rate < threshold < 1, got p={p!r}, p_th={p_th!r}")
        _check_distance(self.nominal_distance)


SUPERCONDUCTING = HardwareProfile(
    name="superconducting-2020",
    cycle_time=Duration(1e-6),
    decode_latency=Duration(0.0),
    gate_prefactor=5.5,
    two_qubit_gate_time=Duration(10e-9),
    measurement_time=Duration(100e-9),
    physical_error_rate=1e-3,
    threshold=1e-2,
)

ION_TRAP = HardwareProfile(
    name="ion-trap-networked",
    cycle_time=Duration(100e-6),
    decode_latency=Duration(0.0),
    gate_prefactor=5.5,
    two_qubit_gate_time=Duration(100e-6),
    measurement_time=Duration(10e-6),
    physical_error_rate=1e-3,
    threshold=1e-2,
)

BUILTIN_PROFILES: Dict[str, HardwareProfile] = {p.name: p for p in (SUPERCONDUCTING, ION_TRAP)}


def get_profile(name: str) -> HardwareProfile:
    try:
        return BUILTIN_PROFILES[name]
    except KeyError:
        known = ", ".join(sorted(BUILTIN_PROFILES))
        raise DomainError(f"unknown hardware profile {name!r} (known: {known})") from None


@dataclass(frozen=True)
class CodeDistanceSelection:
    distance: int
    prefactor: float
    per_round_logical_error: float
    budget: float
    expected_failures: float


@dataclass(frozen=True)
class FactoryEstimate:
    toffoli_time: Duration
    physical_qubits: int
    spacetime_volume: float
    overhead: float


def toffoli_gate_time(profile: HardwareProfile, distance: int | None = None) -> Duration:
    """``C_G * (distance * cycle_time + decode_latency)``.

    Defaults to the profile's nominal distance. Even distances are accepted here
    because the canonical working point is quoted at 30.
    """
    if distance is None:
        distance = profile.nominal_distance
    distance = _check_distance(distance)
    rounds = distance * profile.cycle_time.seconds + profile.decode_latency.seconds
    return Duration(profile.gate_prefactor * rounds)


def logical_error_per_round(distance: int, physical_error_rate: float, threshold: float,
                            prefactor: float = DEFAULT_PREFACTOR) -> float:
    return prefactor * (physical_error_rate / threshold) ** ((distance + 1) / 2)


def select_code_distance(gate_count: int, logical_qubits: int, profile: HardwareProfile,
                         prefactor: float = DEFAULT_PREFACTOR,
                         budget: float = DEFAULT_BUDGET) -> CodeDistanceSelection:
    """Smallest odd distance whose expected logical failures fit in ``budget``.

    Failures are counted per logical qubit per round, over ``C_G * d`` rounds for
    each of ``gate_count`` gates.
    """
    if isinstance(gate_count, bool) or not isinstance(gate_count, int) or gate_count < 1:
        raise DomainError(f"gate_count must be a positive integer, got {gate_count!r}")
    if isinstance(logical_qubits, bool) or not isinstance(logical_qubits, int) or logical_qubits < 1:
        raise DomainError(f"logical_qubits must be a positive integer, got {logical_qubits!r}")
    if not prefactor > 0:
        raise DomainError(f"prefactor must be positive, got {prefactor!r}")
    if not 0 < budget < 1:
        raise DomainError(f"budget must lie in (0, 1), got {budget!r}")

    p, p_th = profile.physical_error_rate, profile.threshold
    for d in range(3, MAX_DISTANCE + 1, 2):
        per_round = logical_error_per_round(d, p, p_th, prefactor)
        failures = per_round * profile.gate_prefactor * d * gate_count * logical_qubits
        if failures <= budget:
            return CodeDistanceSelection(d, prefactor, per_round, budget, failures)
    raise DistanceSelectionError(
        f"no odd code distance <= {MAX_DISTANCE} keeps expected failures under {budget!r} "
        f"for {gate_count} gates on {logical_qubits} logical qubits with p={p!r}"
    )


def factory_footprint(distance: int) -> int:
    """Physical qubits of one Toffoli factory: a 12d x 6d data patch, doubled for measurement qubits."""
    distance = _check_distance(distance)
    return 2 * (12 * distance) * (6 * distance)


def spacetime_volume(physical_qubits: float, toffoli_time: DurationLike) -> float:
    """Qubitseconds occupied."""
    if not physical_qubits > 0:
        raise DomainError(f"physical_qubits must be positive, got {physical_qubits!r}")
    seconds = as_seconds(toffoli_time, "toffoli_time")
    if seconds <= 0:
        raise DomainError("toffoli_time must be strictly positive")
    return physical_qubits * seconds


def ec_overhead(gate_prefactor: float, round_budget: DurationLike,
                physical_syndrome_time: DurationLike) -> float:
    """Dimensionless slowdown ``C_G * (d * tau_s + l_r) / tau_physical``."""
    if not gate_prefactor > 0:
        raise DomainError(f"gate_prefactor must be positive, got {gate_prefactor!r}")
    budget = as_seconds(round_budget, "round_budget")
    physical = as_seconds(physical_syndrome_time, "physical_syndrome_time")
    if budget <= 0 or physical <= 0:
        raise DomainError("round_budget and physical_syndrome_time must be strictly positive")
    return gate_prefactor * budget / physical


def estimate_factory(profile: HardwareProfile, distance: int | None = None) -> FactoryEstimate:
    """Gate time, footprint, spacetime volume and overhead of one factory on ``profile``.

    The overhead is measured against the profile's physical measurement time.
    """
    if distance is None:
        distance = profile.nominal_distance
    t_g = toffoli_gate_time(profile, distance)
    qubits = factory_footprint(distance)
    round_budget = distance * profile.cycle_time.seconds + profile.decode_latency.seconds
    physical = profile.measurement_time.seconds or profile.cycle_time.seconds
    return FactoryEstimate(
        toffoli_time=t_g,
        physical_qubits=qubits,
        spacetime_volume=spacetime_volume(qubits, t_g),
        overhead=ec_overhead(profile.gate_prefactor, round_budget, physical),
    )


def quantum_primitive_time(toffoli_count: int, toffoli_time: DurationLike) -> Duration:
    """``t_Q = G * t_G``."""
    if isinstance(toffoli_count, bool) or not isinstance(toffoli_count, int) or toffoli_count < 1:
        raise DomainError(f"toffoli_count must be a positive integer, got {toffoli_count!r}")
    return Duration(toffoli_count * as_seconds(toffoli_time, "toffoli_time"))


def classical_primitive_time(cycles: int, clock_hz: float = DEFAULT_CLOCK_HZ) -> Duration:
    """``t_C = L / f_clock``."""
    if isinstance(cycles, bool) or not isinstance(cycles, int) or cycles < 1:
        raise DomainError(f"cycles must be a positive integer, got {cycles!r}")
    if not 0 < clock_hz < math.inf:
        raise DomainError(f"clock_hz must be positive, got {clock_hz!r}")
    return Duration(cycles / clock_hz)
