"""Durations and their textual form."""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Union

from .errors import DomainError

#: Seconds per unit, for the suffixes accepted on the command line and in scenario files.
UNIT_SCALE = {"ns": 1e9, "us": 1e6, "ms": 1e3, "s": 1.0}

_DURATION_RE = re.compile(r"^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*([A-Za-zμ]*)\s*$")


@dataclass(frozen=True, order=True)
class Duration:
    """A non-negative, finite span of time in seconds."""

    seconds: float

    def __post_init__(self):
        s = self.seconds
        if isinstance(s, bool) or not isinstance(s, (int, float)):
            raise DomainError(f"duration must be a real number of seconds, got {s!r}")
        if not math.isfinite(s):
            raise DomainError(f"duration must be finite, got {s!r}")
        if s < 0:
            raise DomainError(f"duration must be non-negative, got {s!r}")
        object.__setattr__(self, "seconds", float(s))

    @classmethod
    def parse(cls, text: str) -> "Duration":
        """Parse ``"17ms"``, ``"7 ns"``, ``"1.5e-3s"``.

        Suffixes are case-sensitive and limited to ns, us, ms and s. A bare
        number is read as seconds.
        """
        m = _DURATION_RE.match(text)
        if m is None:
            raise DomainError(f"cannot parse duration {text!r}")
        number, unit = m.groups()
        unit = unit or "s"
        if unit not in UNIT_SCALE:
            raise DomainError(f"unknown duration unit {unit!r} in {text!r} (use ns, us, ms or s)")
        # dividing by an exact power of ten rounds once, so "33ns" == 33e-9
        return cls(float(number) / UNIT_SCALE[unit])

    def to_text(self) -> str:
        """Shortest suffixed form that parses back to exactly this value."""
        s = self.seconds
        if s == 0:
            return "0s"
        for unit in ("s", "ms", "us", "ns"):
            value = s * UNIT_SCALE[unit]
            if value >= 1:
                number = repr(value)
                text = f"{number[:-2] if number.endswith('.0') else number}{unit}"
                if Duration.parse(text).seconds == s:
                    return text
                break
        return f"{s!r}s"

    def __mul__(self, k: float) -> "Duration":
        return Duration(self.seconds * k)

    __rmul__ = __mul__

    def __truediv__(self, k: float) -> "Duration":
        return Duration(self.seconds / k)

    def __str__(self) -> str:
        return self.to_text()


DurationLike = Union[Duration, float, int]


def as_seconds(value: DurationLike, name: str = "duration") -> float:
    if isinstance(value, Duration):
        return value.seconds
    try:
        return Duration(value).seconds
    except DomainError as exc:
        raise DomainError(f"{name}: {exc}") from None


def as_duration(value: Union[DurationLike, str]) -> Duration:
    if isinstance(value, Duration):
        return value
    if isinstance(value, str):
        return Duration.parse(value)
    return Duration(value)
