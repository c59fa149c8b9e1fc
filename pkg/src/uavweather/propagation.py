"""Line-of-sight path loss under multiple weather conditions."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .quantities import ZERO_RATE, AttenuationRate, DecibelValue, Frequency, Length

__all__ = ["FSPL_CONSTANT_DB", "EXACT_FSPL_CONSTANT_DB", "PathLossBreakdown", "path_loss_mw"]

# Constant for f in MHz and d in km. 20 log10(4 pi 1e9 / c0) = 32.4478 is the
# exact value; 32.442 is kept because the published model uses it.
FSPL_CONSTANT_DB = 32.442
EXACT_FSPL_CONSTANT_DB = 20 * math.log10(4 * math.pi * 1e9 / 299_792_458.0)


@dataclass(frozen=True)
class PathLossBreakdown:
    free_space_db: float
    gas_db: float
    weather_db: float

    @property
    def total_db(self) -> float:
        return self.free_space_db + self.gas_db + self.weather_db

    @property
    def total(self) -> DecibelValue:
        return DecibelValue.db(self.total_db)


def path_loss_mw(
    f: Frequency,
    d: Length,
    gas: AttenuationRate = ZERO_RATE,
    weather: AttenuationRate = ZERO_RATE,
) -> PathLossBreakdown:
    """Free-space loss plus gaseous and weather attenuation over distance `d`."""
    if d.m == 0:
        raise DomainError("path loss is undefined at zero distance")
    free_space = FSPL_CONSTANT_DB + 20 * math.log10(f.mhz) + 20 * math.log10(d.km)
    return PathLossBreakdown(free_space, gas.over(d), weather.over(d))
