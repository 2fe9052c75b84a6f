"""Crossover estimates for error-corrected polynomial quantum speedups.

Given per-call costs of a quantum and a classical primitive, the degree of the
polynomial speedup, a classical parallelism model and a Toffoli rate factor,
compute the call count and runtime at which the quantum algorithm breaks even.
"""
from .errors import (
    CrossoverError, DistanceSelectionError, DomainError, RangeError, ScenarioError,
    ScenarioParseError, ScenarioValidationError,
)
from .fault_tolerance import (
    ION_TRAP, SUPERCONDUCTING, CodeDistanceSelection, FactoryEstimate, HardwareProfile,
    classical_primitive_time, ec_overhead, estimate_factory, factory_footprint, get_profile,
    quantum_primitive_time, select_code_distance, spacetime_volume, toffoli_gate_time,
)
from .formatting import format_count, format_duration
from .report import SweepSpec, TableRow, export, preset_rows, preset_table, run_sweep
from .scenarios import (
    CycleCount, DirectClassical, DirectQuantum, Scenario, ToffoliCount, builtin_scenarios,
    dump_scenario, get_scenario, grover_min_gates, load_scenario, load_scenario_file,
    sk_toffoli_count,
)
from .speedup import (
    Amdahl, BreakevenPoint, Fixed, Gustafson, SpeedupQuery, advantage_call_threshold, breakeven,
    classical_runtime, is_advantageous, quantum_runtime, resolve_speedup,
)
from .units import Duration

__version__ = "0.1.0"
