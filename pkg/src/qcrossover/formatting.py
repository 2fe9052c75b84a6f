"""Two-significant-figure rendering of call counts and durations."""
from __future__ import annotations

from decimal import ROUND_HALF_UP, Decimal

from .errors import DomainError
from .units import DurationLike, as_seconds

YEAR = 365.25 * 86400.0

#: (seconds, singular, plural), largest first.
DURATION_UNITS = (
    (1000.0 * YEAR, "millennium", "millennia"),
    (YEAR, "year", "years"),
    (86400.0, "day", "days"),
    (3600.0, "hour", "hours"),
    (60.0, "minute", "minutes"),
    (1.0, "second", "seconds"),
)


def round_sig(value: float, digits: int = 2) -> Decimal:
    """Round to ``digits`` significant figures, ties away from zero.

    The value is first cut to 15 significant digits so that representation noise
    (``5.5 * 30e-6 * 1e6 == 164.99999999999997``) does not decide a tie.
    """
    d = Decimal(f"{float(value):.15g}")
    if d == 0:
        return Decimal(0)
    quantum = Decimal(1).scaleb(d.adjusted() - digits + 1)
    return d.quantize(quantum, rounding=ROUND_HALF_UP)


def format_mantissa(value: float) -> str:
    """``8.757`` -> ``"8.8"``, ``101.4`` -> ``"100"``, ``1.0`` -> ``"1.0"``."""
    r = round_sig(value)
    if r == 0:
        return "0"
    if r.adjusted() >= 1:
        return str(int(r))
    return f"{r:f}"


def split_duration(value: DurationLike):
    """Pick the display unit for a duration: returns (magnitude, singular, plural)."""
    seconds = as_seconds(value)
    for scale, singular, plural in DURATION_UNITS:
        if seconds >= scale:
            return seconds / scale, singular, plural
    return seconds, "second", "seconds"


def format_duration(value: DurationLike) -> str:
    """Human duration in the largest unit not exceeding the value, e.g. ``"2.4 hours"``."""
    magnitude, singular, plural = split_duration(value)
    text = format_mantissa(magnitude)
    unit = singular if round_sig(magnitude) == 1 else plural
    return f"{text} {unit}"


def format_count(value: float, unicode: bool = True) -> str:
    """Scientific notation to 2 significant figures: ``"5.2×10^5"``."""
    if not value > 0:
        raise DomainError(f"count must be positive, got {value!r}")
    r = round_sig(value)
    exponent = r.adjusted()
    mantissa = r.scaleb(-exponent)
    times = "×" if unicode else "x"
    return f"{mantissa:.1f}{times}10^{exponent}"


def parse_duration_display(text: str) -> float:
    """Inverse of :func:`format_duration`, in seconds."""
    number, unit = text.split()
    for scale, singular, plural in DURATION_UNITS:
        if unit in (singular, plural):
            return float(number) * scale
    raise DomainError(f"unknown display unit {unit!r}")


def parse_count_display(text: str) -> float:
    mantissa, exponent = text.replace("×", "x").split("x10^")
    return float(mantissa) * 10.0 ** int(exponent)
