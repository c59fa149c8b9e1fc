"""Unit-carrying scalar quantities.

Everything is stored in SI base units (Hz, m) or in dB/km for specific
attenuation. Empirical formulas that want GHz, MHz, km or cm read the
matching accessor at the point of use, never earlier.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from scipy.constants import speed_of_light

from .errors import DegenerateGeometryError, DomainError

__all__ = [
    "SPEED_OF_LIGHT",
    "Frequency",
    "Length",
    "AttenuationRate",
    "DecibelValue",
    "wavelength",
    "slant_distance",
]

SPEED_OF_LIGHT = speed_of_light  # 299 792 458 m/s, exact


@dataclass(frozen=True, order=True)
class Frequency:
    """A strictly positive frequency, stored in Hz."""

    hz: float

    def __post_init__(self):
        if not (self.hz > 0) or math.isinf(self.hz):
            raise DomainError(f"frequency must be positive and finite, got {self.hz!r} Hz")
        object.__setattr__(self, "hz", float(self.hz))

    @classmethod
    def from_ghz(cls, value: float) -> Frequency:
        return cls(value * 1e9)

    @classmethod
    def from_mhz(cls, value: float) -> Frequency:
        return cls(value * 1e6)

    @property
    def ghz(self) -> float:
        return self.hz / 1e9

    @property
    def mhz(self) -> float:
        return self.hz / 1e6

    def __str__(self):
        return f"{self.ghz:g} GHz"


@dataclass(frozen=True, order=True)
class Length:
    """A non-negative length, stored in metres."""

    m: float

    def __post_init__(self):
        if not (self.m >= 0) or math.isinf(self.m):
            raise DomainError(f"length must be non-negative and finite, got {self.m!r} m")
        object.__setattr__(self, "m", float(self.m))

    @classmethod
    def from_km(cls, value: float) -> Length:
        return cls(value * 1e3)

    @classmethod
    def from_cm(cls, value: float) -> Length:
        return cls(value * 1e-2)

    @classmethod
    def from_mm(cls, value: float) -> Length:
        return cls(value * 1e-3)

    @property
    def km(self) -> float:
        return self.m / 1e3

    @property
    def cm(self) -> float:
        return self.m * 1e2

    @property
    def mm(self) -> float:
        return self.m * 1e3

    def __str__(self):
        return f"{self.m:g} m"


@dataclass(frozen=True, order=True)
class AttenuationRate:
    """Specific attenuation in dB/km."""

    db_per_km: float

    def __post_init__(self):
        if math.isnan(self.db_per_km):
            raise DomainError("attenuation rate is NaN")
        object.__setattr__(self, "db_per_km", float(self.db_per_km))

    def __add__(self, other: AttenuationRate) -> AttenuationRate:
        if not isinstance(other, AttenuationRate):
            return NotImplemented
        return AttenuationRate(self.db_per_km + other.db_per_km)

    def over(self, distance: Length) -> float:
        """Total attenuation in dB accumulated over `distance`."""
        return self.db_per_km * distance.km

    def __float__(self):
        return self.db_per_km

    def __str__(self):
        return f"{self.db_per_km:g} dB/km"


ZERO_RATE = AttenuationRate(0.0)

Unit = Literal["dB", "dBm"]


@dataclass(frozen=True)
class DecibelValue:
    """A logarithmic quantity tagged as relative (dB) or absolute power (dBm).

    Arithmetic follows power-budget rules: a relative value may be added to
    or subtracted from anything, two absolute powers may only be subtracted
    (giving a ratio in dB), and adding two absolute powers is refused.
    """

    value: float
    unit: Unit = "dB"

    def __post_init__(self):
        if self.unit not in ("dB", "dBm"):
            raise DomainError(f"unknown decibel unit {self.unit!r}")
        object.__setattr__(self, "value", float(self.value))

    @classmethod
    def db(cls, value: float) -> DecibelValue:
        return cls(value, "dB")

    @classmethod
    def dbm(cls, value: float) -> DecibelValue:
        return cls(value, "dBm")

    def _coerce(self, other) -> DecibelValue:
        if isinstance(other, DecibelValue):
            return other
        if isinstance(other, (int, float)):
            return DecibelValue(other, "dB")
        raise TypeError(f"cannot combine DecibelValue with {type(other).__name__}")

    def __add__(self, other) -> DecibelValue:
        other = self._coerce(other)
        if self.unit == "dBm" and other.unit == "dBm":
            raise TypeError("adding two absolute powers in dBm is meaningless")
        unit = "dBm" if "dBm" in (self.unit, other.unit) else "dB"
        return DecibelValue(self.value + other.value, unit)

    __radd__ = __add__

    def __sub__(self, other) -> DecibelValue:
        other = self._coerce(other)
        if self.unit == "dB" and other.unit == "dBm":
            raise TypeError("cannot subtract an absolute power from a ratio")
        unit = "dBm" if (self.unit, other.unit) == ("dBm", "dB") else "dB"
        return DecibelValue(self.value - other.value, unit)

    def __neg__(self) -> DecibelValue:
        if self.unit == "dBm":
            raise TypeError("cannot negate an absolute power")
        return DecibelValue(-self.value, "dB")

    def __lt__(self, other) -> bool:
        other = self._coerce(other)
        if other.unit != self.unit:
            raise TypeError("cannot compare dB with dBm")
        return self.value < other.value

    def __float__(self):
        return self.value

    def __str__(self):
        return f"{self.value:.4f} {self.unit}"


def wavelength(f: Frequency) -> Length:
    """Free-space wavelength c0 / f."""
    if not isinstance(f, Frequency):
        raise TypeError("wavelength expects a Frequency")
    return Length(SPEED_OF_LIGHT / f.hz)


def slant_distance(h: Length, r: Length) -> Length:
    """Straight-line UAV-to-user distance from altitude and ground radius."""
    if h.m == 0 and r.m == 0:
        raise DegenerateGeometryError("altitude and ground radius are both zero")
    return Length(math.hypot(h.m, r.m))
