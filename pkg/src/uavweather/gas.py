"""Clear-air attenuation from oxygen and water vapour, summed line by line.

The imaginary refractivity of each gas is a sum of line strengths times a
pressure-broadened line shape with an interference correction for oxygen,
plus the dry-air continuum (Debye spectrum of oxygen and pressure-induced
nitrogen absorption). Specific attenuation is 0.1820 f N'' with f in GHz.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ModelRangeError
from .itu_data import SpectroscopicLineTable, default_line_table
from .quantities import AttenuationRate, Frequency

__all__ = [
    "GAS_VALID_GHZ",
    "AtmosphereState",
    "STANDARD_ATMOSPHERE",
    "GasAttenuationBreakdown",
    "vapour_partial_pressure",
    "refractivity_imag",
    "gas_specific_attenuation",
]

GAS_VALID_GHZ = (1.0, 1000.0)


def vapour_partial_pressure(density_g_m3: float, temperature_k: float) -> float:
    """Water-vapour partial pressure in hPa."""
    return density_g_m3 * temperature_k / 216.7


@dataclass(frozen=True)
class AtmosphereState:
    """Ground-level state: dry-air pressure (hPa), temperature (K), vapour density (g/m^3)."""

    dry_pressure_hpa: float = 1013.25 - vapour_partial_pressure(7.5, 288.15)
    temperature_k: float = 288.15
    vapour_density_g_m3: float = 7.5

    def __post_init__(self):
        if not self.dry_pressure_hpa > 0:
            raise DomainError(f"dry pressure must be positive, got {self.dry_pressure_hpa}")
        if not 150 < self.temperature_k < 350:
            raise DomainError(f"temperature must lie in (150, 350) K, got {self.temperature_k}")
        if not self.vapour_density_g_m3 >= 0:
            raise DomainError(f"vapour density must be non-negative, got {self.vapour_density_g_m3}")

    @classmethod
    def from_total_pressure(
        cls, total_pressure_hpa: float, temperature_k: float, vapour_density_g_m3: float
    ) -> AtmosphereState:
        e = vapour_partial_pressure(vapour_density_g_m3, temperature_k)
        return cls(total_pressure_hpa - e, temperature_k, vapour_density_g_m3)

    @property
    def vapour_pressure_hpa(self) -> float:
        return vapour_partial_pressure(self.vapour_density_g_m3, self.temperature_k)

    @property
    def total_pressure_hpa(self) -> float:
        return self.dry_pressure_hpa + self.vapour_pressure_hpa

    @property
    def theta(self) -> float:
        return 300.0 / self.temperature_k


# 1013.25 hPa total, 15 degC, 7.5 g/m^3
STANDARD_ATMOSPHERE = AtmosphereState()


@dataclass(frozen=True)
class GasAttenuationBreakdown:
    oxygen: AttenuationRate
    water_vapour: AttenuationRate

    @property
    def total(self) -> AttenuationRate:
        return self.oxygen + self.water_vapour


def _oxygen_refractivity(f: float, atmos: AtmosphereState, lines: np.ndarray) -> float:
    f0, a1, a2, a3, a4, a5, a6 = lines
    p = atmos.dry_pressure_hpa
    e = atmos.vapour_pressure_hpa
    th = atmos.theta

    strength = a1 * 1e-7 * p * th**3 * np.exp(a2 * (1 - th))
    width = a3 * 1e-4 * (p * th ** (0.8 - a4) + 1.1 * e * th)
    width = np.sqrt(width**2 + 2.25e-6)  # Zeeman splitting
    interference = (a5 + a6 * th) * 1e-4 * (p + e) * th**0.8
    shape = (f / f0) * (
        (width - interference * (f0 - f)) / ((f0 - f) ** 2 + width**2)
        + (width - interference * (f0 + f)) / ((f0 + f) ** 2 + width**2)
    )

    d = 5.6e-4 * (p + e) * th**0.8
    continuum = f * p * th**2 * (
        6.14e-5 / (d * (1 + (f / d) ** 2))
        + 1.4e-12 * p * th**1.5 / (1 + 1.9e-5 * f**1.5)
    )
    return float(np.sum(strength * shape) + continuum)


def _water_refractivity(f: float, atmos: AtmosphereState, lines: np.ndarray) -> float:
    e = atmos.vapour_pressure_hpa
    if e == 0:
        return 0.0
    f0, b1, b2, b3, b4, b5, b6 = lines
    p = atmos.dry_pressure_hpa
    th = atmos.theta

    strength = b1 * 1e-1 * e * th**3.5 * np.exp(b2 * (1 - th))
    width = b3 * 1e-4 * (p * th**b4 + b5 * e * th**b6)
    width = 0.535 * width + np.sqrt(0.217 * width**2 + 2.1316e-12 * f0**2 / th)  # Doppler
    shape = (f / f0) * (width / ((f0 - f) ** 2 + width**2) + width / ((f0 + f) ** 2 + width**2))
    return float(np.sum(strength * shape))


def refractivity_imag(
    f: Frequency,
    atmos: AtmosphereState = STANDARD_ATMOSPHERE,
    gas: str = "oxygen",
    lines: SpectroscopicLineTable | None = None,
) -> float:
    """Imaginary part N'' of the complex refractivity contributed by `gas`.

    The oxygen term includes the dry continuum.
    """
    lo, hi = GAS_VALID_GHZ
    if not lo <= f.ghz <= hi:
        raise ModelRangeError(f"gas model is valid for {lo:g}-{hi:g} GHz, got {f.ghz:g} GHz")
    lines = lines or default_line_table()
    if gas == "oxygen":
        return _oxygen_refractivity(f.ghz, atmos, lines.columns("oxygen"))
    if gas == "water_vapour":
        return _water_refractivity(f.ghz, atmos, lines.columns("water_vapour"))
    raise KeyError(f"unknown gas {gas!r}")


def gas_specific_attenuation(
    f: Frequency,
    atmos: AtmosphereState = STANDARD_ATMOSPHERE,
    lines: SpectroscopicLineTable | None = None,
) -> GasAttenuationBreakdown:
    oxygen = refractivity_imag(f, atmos, "oxygen", lines)
    water = refractivity_imag(f, atmos, "water_vapour", lines)
    return GasAttenuationBreakdown(
        AttenuationRate(0.1820 * f.ghz * oxygen),
        AttenuationRate(0.1820 * f.ghz * water),
    )
