"""Runtime algebra for polynomial quantum speedups against parallel classical adversaries.

A quantum algorithm makes ``M`` calls to a primitive costing ``t_q`` each, served
by Toffoli factories that are ``R`` times faster than the baseline. The classical
competitor makes ``M**degree`` calls costing ``t_c`` each, spread over hardware
that runs ``S`` times faster than a single core. The breakeven point is where the
two total runtimes meet.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

from .errors import DomainError, RangeError
from .units import Duration, DurationLike, as_duration, as_seconds


def _check_real(value, name: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DomainError(f"{name} must be a real number, got {value!r}")
    value = float(value)
    if math.isnan(value):
        raise DomainError(f"{name} must not be NaN")
    return value


def check_degree(degree) -> float:
    degree = _check_real(degree, "degree")
    if not degree > 1 or math.isinf(degree):
        raise DomainError(f"speedup degree must be a finite real > 1, got {degree!r}")
    return degree


@dataclass(frozen=True)
class Fixed:
    """A known classical speedup factor."""

    speedup: float = 1.0

    def __post_init__(self):
        s = _check_real(self.speedup, "speedup")
        if not 1 <= s < math.inf:
            raise DomainError(f"fixed speedup must be finite and >= 1, got {s!r}")
        object.__setattr__(self, "speedup", s)

    def resolve(self) -> float:
        return self.speedup


@dataclass(frozen=True)
class _SerialFractionLaw:
    serial_fraction: float
    processors: int

    def __post_init__(self):
        alpha = _check_real(self.serial_fraction, "serial_fraction")
        if not 0 <= alpha <= 1:
            raise DomainError(f"serial_fraction must lie in [0, 1], got {alpha!r}")
        p = self.processors
        if isinstance(p, float) and p.is_integer():
            p = int(p)
        if isinstance(p, bool) or not isinstance(p, int) or p < 1:
            raise DomainError(f"processors must be an integer >= 1, got {self.processors!r}")
        object.__setattr__(self, "serial_fraction", alpha)
        object.__setattr__(self, "processors", p)


@dataclass(frozen=True)
class Amdahl(_SerialFractionLaw):
    """Fixed-size workload: ``S = 1 / (alpha + (1 - alpha) / P)``."""

    def resolve(self) -> float:
        alpha, p = self.serial_fraction, self.processors
        return 1.0 / (alpha + (1.0 - alpha) / p)


@dataclass(frozen=True)
class Gustafson(_SerialFractionLaw):
    """Scaled workload: ``S = alpha + (1 - alpha) * P``."""

    def resolve(self) -> float:
        alpha, p = self.serial_fraction, self.processors
        return alpha + (1.0 - alpha) * p


ParallelismConfig = Union[Fixed, Amdahl, Gustafson]


def resolve_speedup(config: Union[ParallelismConfig, float]) -> float:
    """Classical speedup factor ``S`` for a parallelism model (a bare number means ``Fixed``)."""
    if not isinstance(config, (Fixed, Amdahl, Gustafson)):
        config = Fixed(config)
    return config.resolve()


@dataclass(frozen=True)
class SpeedupQuery:
    """Everything needed to locate the quantum/classical crossover."""

    t_q: Duration
    t_c: Duration
    degree: float = 2.0
    parallelism: ParallelismConfig = field(default_factory=Fixed)
    rate_factor: float = 1.0

    def __post_init__(self):
        t_q, t_c = as_duration(self.t_q), as_duration(self.t_c)
        if t_q.seconds <= 0:
            raise DomainError("t_q must be strictly positive")
        if t_c.seconds <= 0:
            raise DomainError("t_c must be strictly positive")
        par = self.parallelism
        if not isinstance(par, (Fixed, Amdahl, Gustafson)):
            par = Fixed(par)
        object.__setattr__(self, "t_q", t_q)
        object.__setattr__(self, "t_c", t_c)
        object.__setattr__(self, "degree", check_degree(self.degree))
        object.__setattr__(self, "parallelism", par)
        object.__setattr__(self, "rate_factor", _check_rate(self.rate_factor))

    @property
    def speedup(self) -> float:
        return self.parallelism.resolve()


@dataclass(frozen=True)
class BreakevenPoint:
    calls: float
    runtime: Duration
    speedup: float
    effective_t_q: Duration
    effective_t_c: Duration
    degree: float = 2.0

    @property
    def classical_calls(self) -> float:
        """Classical primitive calls made by the competitor at breakeven, ``M***degree``."""
        return _pow(self.calls, self.degree)


def _check_rate(rate) -> float:
    rate = _check_real(rate, "rate_factor")
    if not 1 <= rate < math.inf:
        raise DomainError(f"rate_factor must be finite and >= 1, got {rate!r}")
    return rate


def _check_calls(calls) -> float:
    calls = _check_real(calls, "calls")
    if not 0 < calls < math.inf:
        raise DomainError(f"calls must be finite and > 0, got {calls!r}")
    return calls


def _pow(base: float, exponent: float) -> float:
    try:
        out = base ** exponent
    except OverflowError:
        raise RangeError(f"{base!r} ** {exponent!r} overflows double precision") from None
    if math.isinf(out):
        raise RangeError(f"{base!r} ** {exponent!r} overflows double precision")
    return out


def _finite(value: float, what: str) -> float:
    if math.isinf(value):
        raise RangeError(f"{what} overflows double precision")
    return value


def quantum_runtime(calls: float, t_q: DurationLike, rate_factor: float = 1.0) -> Duration:
    """Total quantum runtime ``M * t_q / R``."""
    calls = _check_calls(calls)
    rate = _check_rate(rate_factor)
    return Duration(_finite(calls * as_seconds(t_q, "t_q") / rate, "quantum runtime"))


def classical_runtime(calls: float, degree: float, t_c: DurationLike, speedup: float = 1.0) -> Duration:
    """Total classical runtime ``M**degree * t_c / S``."""
    calls = _check_calls(calls)
    degree = check_degree(degree)
    speedup = Fixed(speedup).speedup
    work = _pow(calls, degree)
    return Duration(_finite(work * as_seconds(t_c, "t_c") / speedup, "classical runtime"))


def advantage_call_threshold(query: SpeedupQuery) -> float:
    """Call count ``M*`` beyond which the quantum algorithm is faster.

    ``M* = (t_q * S / (t_c * R)) ** (1 / (degree - 1))``
    """
    ratio = query.t_q.seconds * query.speedup / (query.t_c.seconds * query.rate_factor)
    _finite(ratio, "t_q * S / (t_c * R)")
    return _pow(ratio, 1.0 / (query.degree - 1.0))


def breakeven(query: SpeedupQuery) -> BreakevenPoint:
    """Call count and runtime at which quantum and classical runtimes are equal."""
    calls = advantage_call_threshold(query)
    runtime = quantum_runtime(calls, query.t_q, query.rate_factor)
    s = query.speedup
    return BreakevenPoint(
        calls=calls,
        runtime=runtime,
        speedup=s,
        effective_t_q=query.t_q / query.rate_factor,
        effective_t_c=query.t_c / s,
        degree=query.degree,
    )


def is_advantageous(calls: float, query: SpeedupQuery) -> bool:
    """True when ``calls`` strictly exceeds the breakeven call count.

    Equivalent to ``quantum_runtime < classical_runtime``; comparing call counts
    keeps the boundary itself (where both runtimes are equal) on the
    non-advantageous side regardless of rounding in the runtimes.
    """
    return _check_calls(calls) > advantage_call_threshold(query)
