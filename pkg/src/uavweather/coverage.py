"""Coverage radius of a UAV cell as a function of altitude.

The weather-extended A2G path loss grows monotonically with ground radius at
fixed altitude, so the radius at which it reaches the tolerable maximum is
found by bracketing and bisection. Sweeping the altitude and scanning the
radii gives the best altitude on the grid.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from scipy.optimize import bisect

from .a2g import A2GEnvironment, aerial_path_loss_db
from .errors import DomainError, UavWeatherError
from .link_budget import RadioSystem, noise_power
from .quantities import ZERO_RATE, AttenuationRate, DecibelValue, Frequency, Length

__all__ = [
    "RADIUS_CAP_M",
    "RESIDUAL_TOL_DB",
    "UnboundedRadiusError",
    "CoveragePoint",
    "CoverageCurve",
    "max_path_loss",
    "coverage_radius",
    "coverage_curve",
    "altitude_grid",
]

RADIUS_CAP_M = 100_000.0
RESIDUAL_TOL_DB = 0.01
_R_XTOL_M = 1e-7


class UnboundedRadiusError(UavWeatherError):
    """Path loss stays below the threshold out to the radius cap."""

    def __init__(self, altitude_m: float, cap_m: float):
        super().__init__(
            f"path loss never reaches the threshold within {cap_m:g} m at altitude {altitude_m:g} m"
        )
        self.altitude_m = altitude_m
        self.cap_m = cap_m


@dataclass(frozen=True)
class CoveragePoint:
    altitude: Length
    radius: Length
    path_loss: DecibelValue


@dataclass(frozen=True)
class CoverageCurve:
    altitudes_m: tuple[float, ...]
    points: tuple[CoveragePoint | None, ...]
    statuses: tuple[str, ...]  # "ok", "unreachable" or "unbounded"

    @property
    def is_empty(self) -> bool:
        return all(p is None for p in self.points)

    @property
    def best(self) -> CoveragePoint | None:
        """Grid point with the largest radius; ties go to the lowest altitude."""
        best = None
        for point in self.points:
            if point is not None and (best is None or point.radius.m > best.radius.m):
                best = point
        return best

    @property
    def max_radius_m(self) -> float | None:
        best = self.best
        return None if best is None else best.radius.m

    @property
    def best_altitude_m(self) -> float | None:
        best = self.best
        return None if best is None else best.altitude.m


def max_path_loss(sys: RadioSystem, tx_gain_db: float, rx_gain_db: float, snr_min_db: float) -> DecibelValue:
    """Largest path loss that still leaves at least `snr_min_db` of SNR."""
    budget = (
        sys.transmit_power
        - sys.rx_front_end_loss_db
        - sys.tx_front_end_loss_db
        + tx_gain_db
        + rx_gain_db
    )
    return budget - noise_power(sys) - snr_min_db


def coverage_radius(
    h: Length,
    pl_max: DecibelValue | float,
    f: Frequency,
    env: A2GEnvironment,
    gas: AttenuationRate = ZERO_RATE,
    weather: AttenuationRate = ZERO_RATE,
    radius_cap_m: float = RADIUS_CAP_M,
) -> CoveragePoint | None:
    """Ground radius where the A2G path loss equals `pl_max`.

    Returns None when the threshold is already exceeded straight below the
    UAV. Raises UnboundedRadiusError when it is not reached within the cap.
    """
    threshold = float(pl_max)
    if not math.isfinite(threshold):
        raise DomainError("maximum path loss must be finite")
    h_m = h.m
    rate = gas.db_per_km + weather.db_per_km

    def excess(r: float) -> float:
        return aerial_path_loss_db(h_m, r, f.hz, env, rate) - threshold

    if h_m > 0:
        lo = 0.0
        if excess(0.0) > 0:
            return None
    else:
        # loss diverges to -inf as r -> 0 on the ground
        lo = 1.0
        while excess(lo) > 0:
            lo /= 2
            if lo < 1e-12:
                return None
    hi = max(lo, 1.0)
    while excess(hi) <= 0:
        if hi >= radius_cap_m:
            raise UnboundedRadiusError(h_m, radius_cap_m)
        lo = hi
        hi = min(2 * hi, radius_cap_m)

    if excess(lo) == 0:
        r = lo
    else:
        r = bisect(excess, lo, hi, xtol=_R_XTOL_M, maxiter=200)
    pl = aerial_path_loss_db(h_m, r, f.hz, env, rate)
    return CoveragePoint(h, Length(r), DecibelValue.db(pl))


def altitude_grid(start_m: float = 0.0, stop_m: float = 5000.0, step_m: float = 10.0) -> list[float]:
    if step_m <= 0 or stop_m < start_m:
        raise DomainError("altitude grid must be increasing with a positive step")
    n = int(round((stop_m - start_m) / step_m))
    return [start_m + i * step_m for i in range(n + 1)]


def coverage_curve(
    altitudes_m: Iterable[float],
    pl_max: DecibelValue | float,
    f: Frequency,
    env: A2GEnvironment,
    gas: AttenuationRate = ZERO_RATE,
    weather: AttenuationRate = ZERO_RATE,
    radius_cap_m: float = RADIUS_CAP_M,
) -> CoverageCurve:
    grid: Sequence[float] = tuple(float(h) for h in altitudes_m)
    if not grid:
        raise DomainError("altitude grid is empty")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise DomainError("altitude grid must be strictly increasing")

    points: list[CoveragePoint | None] = []
    statuses: list[str] = []
    for h in grid:
        try:
            point = coverage_radius(Length(h), pl_max, f, env, gas, weather, radius_cap_m)
        except UnboundedRadiusError:
            points.append(None)
            statuses.append("unbounded")
            continue
        points.append(point)
        statuses.append("ok" if point is not None else "unreachable")
    return CoverageCurve(grid, tuple(points), tuple(statuses))
