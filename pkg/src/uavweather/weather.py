"""Specific attenuation of rain, fog and dry snow.

Rain uses the ITU power law k R^alpha with the Gaussian-sum fits for k and
alpha, mixed for arbitrary path elevation and polarisation tilt. Fog follows
the Rayleigh liquid-water model with the double-Debye permittivity of water.
Dry snow uses Oguchi's two-term wavelength formula.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import DomainError, ModelRangeError
from .itu_data import RAIN_FAMILIES, RainFitTable, default_rain_table
from .quantities import ZERO_RATE, AttenuationRate, Frequency, wavelength

__all__ = [
    "RAIN_VALID_GHZ",
    "SNOW_VALID_GHZ",
    "FOG_TEMPERATURE_K",
    "FOG_TEMPERATURE_WINDOW_K",
    "PolarizationGeometry",
    "CIRCULAR",
    "RainPowerLaw",
    "FogPermittivity",
    "rain_power_law",
    "mix_polarization",
    "rain_power_law_mixed",
    "rain_specific_attenuation",
    "fog_permittivity",
    "fog_specific_attenuation",
    "snow_specific_attenuation",
    "Clear",
    "Rain",
    "Fog",
    "DrySnow",
    "WeatherCondition",
    "parse_weather",
]

RAIN_VALID_GHZ = (1.0, 1000.0)
# Oguchi's formula has no published upper bound; 200 GHz keeps the 188 GHz
# case in range while refusing the sub-millimetre bands.
SNOW_VALID_GHZ = (1.0, 200.0)
FOG_TEMPERATURE_K = 293.15
FOG_TEMPERATURE_WINDOW_K = (253.15, 313.15)


def _check_window(f: Frequency, window: tuple[float, float], model: str) -> None:
    lo, hi = window
    if not lo <= f.ghz <= hi:
        raise ModelRangeError(
            f"{model} model is valid for {lo:g}-{hi:g} GHz, got {f.ghz:g} GHz"
        )


def _check_intensity(value: float, name: str) -> float:
    value = float(value)
    if math.isnan(value) or value < 0:
        raise DomainError(f"{name} must be non-negative, got {value!r}")
    return value


@dataclass(frozen=True)
class PolarizationGeometry:
    """Path elevation and polarisation tilt, both in degrees.

    tilt 0 is horizontal, 90 vertical and 45 circular polarisation.
    """

    elevation_deg: float = 0.0
    tilt_deg: float = 45.0

    def __post_init__(self):
        if not 0 <= self.elevation_deg <= 90:
            raise DomainError(f"path elevation must lie in [0, 90] deg, got {self.elevation_deg}")
        if not 0 <= self.tilt_deg <= 90:
            raise DomainError(f"polarisation tilt must lie in [0, 90] deg, got {self.tilt_deg}")

    @property
    def mixing(self) -> float:
        """cos^2(elevation) * cos(2 tilt), the weight of the H-V difference."""
        el = math.radians(self.elevation_deg)
        return math.cos(el) ** 2 * math.cos(2 * math.radians(self.tilt_deg))


CIRCULAR = PolarizationGeometry(0.0, 45.0)


@dataclass(frozen=True)
class RainPowerLaw:
    k: float
    alpha: float

    def __post_init__(self):
        if not (self.k > 0 and self.alpha > 0):
            raise DomainError(f"power law needs k > 0 and alpha > 0, got {self.k}, {self.alpha}")

    def __call__(self, rate_mm_h: float) -> float:
        return self.k * rate_mm_h**self.alpha


def rain_power_law(
    f: Frequency,
    table: RainFitTable | None = None,
    family: str = "kH",
    valid_ghz: tuple[float, float] = RAIN_VALID_GHZ,
) -> float:
    """Evaluate one coefficient family at `f`.

    k families return ``10**(fit)``, alpha families return the fit directly.
    """
    if family not in RAIN_FAMILIES:
        raise KeyError(f"unknown rain coefficient family {family!r}")
    _check_window(f, valid_ghz, "rain")
    table = table or default_rain_table()
    value = table.family(family).evaluate(math.log10(f.ghz))
    return 10.0**value if family.startswith("k") else value


def mix_polarization(
    kH: float, kV: float, alphaH: float, alphaV: float, geom: PolarizationGeometry = CIRCULAR
) -> RainPowerLaw:
    """Combine horizontal and vertical coefficients for a given path geometry."""
    if min(kH, kV, alphaH, alphaV) <= 0:
        raise DomainError("polarisation coefficients must be positive")
    w = geom.mixing
    k = (kH + kV + (kH - kV) * w) / 2
    alpha = (kH * alphaH + kV * alphaV + (kH * alphaH - kV * alphaV) * w) / (2 * k)
    return RainPowerLaw(k, alpha)


def rain_power_law_mixed(
    f: Frequency,
    geom: PolarizationGeometry = CIRCULAR,
    table: RainFitTable | None = None,
    valid_ghz: tuple[float, float] = RAIN_VALID_GHZ,
) -> RainPowerLaw:
    coeffs = {name: rain_power_law(f, table, name, valid_ghz) for name in RAIN_FAMILIES}
    return mix_polarization(coeffs["kH"], coeffs["kV"], coeffs["alphaH"], coeffs["alphaV"], geom)


def rain_specific_attenuation(
    f: Frequency,
    rate_mm_h: float,
    geom: PolarizationGeometry = CIRCULAR,
    table: RainFitTable | None = None,
    power_law: RainPowerLaw | None = None,
) -> AttenuationRate:
    """gamma_R = k R^alpha in dB/km.

    `power_law` bypasses the fitted coefficients, which is useful for tests
    and for callers with their own (k, alpha).
    """
    rate = _check_intensity(rate_mm_h, "rain rate")
    law = power_law or rain_power_law_mixed(f, geom, table)
    if rate == 0:
        return ZERO_RATE
    return AttenuationRate(law(rate))


@dataclass(frozen=True)
class FogPermittivity:
    """Double-Debye complex permittivity of liquid water at one (f, T)."""

    real: float
    imag: float
    eta: float
    theta: float
    eps0: float
    eps1: float
    eps2: float
    fp_ghz: float
    fs_ghz: float


def fog_permittivity(f: Frequency, temperature_k: float = FOG_TEMPERATURE_K) -> FogPermittivity:
    lo, hi = FOG_TEMPERATURE_WINDOW_K
    if not lo <= temperature_k <= hi:
        raise ModelRangeError(
            f"fog temperature must lie in {lo}-{hi} K, got {temperature_k} K"
        )
    theta = 300.0 / temperature_k
    eps0 = 77.66 + 103.3 * (theta - 1)
    eps1 = 0.0671 * eps0
    eps2 = 3.52
    fp = 20.20 - 146 * (theta - 1) + 316 * (theta - 1) ** 2
    fs = 39.8 * fp

    x = f.ghz
    rp = 1 + (x / fp) ** 2
    rs = 1 + (x / fs) ** 2
    imag = x * (eps0 - eps1) / (fp * rp) + x * (eps1 - eps2) / (fs * rs)
    real = (eps0 - eps1) / rp + (eps1 - eps2) / rs + eps2
    eta = (2 + real) / imag
    return FogPermittivity(real, imag, eta, theta, eps0, eps1, eps2, fp, fs)


def fog_coefficient(f: Frequency, temperature_k: float = FOG_TEMPERATURE_K) -> float:
    """K_l in (dB/km)/(g/m^3)."""
    perm = fog_permittivity(f, temperature_k)
    return 0.819 * f.ghz / (perm.imag * (1 + perm.eta**2))


def fog_specific_attenuation(
    f: Frequency, density_g_m3: float, temperature_k: float = FOG_TEMPERATURE_K
) -> AttenuationRate:
    """gamma_c = K_l(f, T) * M in dB/km."""
    density = _check_intensity(density_g_m3, "liquid water density")
    coeff = fog_coefficient(f, temperature_k)
    if density == 0:
        return ZERO_RATE
    return AttenuationRate(coeff * density)


def snow_specific_attenuation(
    f: Frequency,
    rate_mm_h: float,
    valid_ghz: tuple[float, float] = SNOW_VALID_GHZ,
    allow_extrapolation: bool = False,
) -> AttenuationRate:
    """Dry-snow attenuation with the wavelength expressed in centimetres."""
    rate = _check_intensity(rate_mm_h, "snowfall rate")
    if not allow_extrapolation:
        _check_window(f, valid_ghz, "dry-snow")
    if rate == 0:
        return ZERO_RATE
    lam_cm = wavelength(f).cm
    return AttenuationRate(0.00349 * rate**1.6 / lam_cm**4 + 0.00224 * rate / lam_cm)


# -- weather conditions ---------------------------------------------------


@dataclass(frozen=True)
class Clear:
    kind = "clear"

    @property
    def intensity(self) -> float:
        return 0.0

    def specific_attenuation(self, f: Frequency, **_) -> AttenuationRate:
        return ZERO_RATE

    def spec(self) -> str:
        return "clear"


@dataclass(frozen=True)
class Rain:
    rate_mm_h: float
    geometry: PolarizationGeometry = CIRCULAR
    kind = "rain"

    def __post_init__(self):
        _check_intensity(self.rate_mm_h, "rain rate")

    @property
    def intensity(self) -> float:
        return self.rate_mm_h

    def specific_attenuation(self, f: Frequency, **_) -> AttenuationRate:
        return rain_specific_attenuation(f, self.rate_mm_h, self.geometry)

    def spec(self) -> str:
        return f"rain:{self.rate_mm_h:g}"


@dataclass(frozen=True)
class Fog:
    density_g_m3: float
    temperature_k: float = FOG_TEMPERATURE_K
    kind = "fog"

    def __post_init__(self):
        _check_intensity(self.density_g_m3, "liquid water density")

    @property
    def intensity(self) -> float:
        return self.density_g_m3

    def specific_attenuation(self, f: Frequency, **_) -> AttenuationRate:
        return fog_specific_attenuation(f, self.density_g_m3, self.temperature_k)

    def spec(self) -> str:
        return f"fog:{self.density_g_m3:g}"


@dataclass(frozen=True)
class DrySnow:
    rate_mm_h: float
    kind = "snow"

    def __post_init__(self):
        _check_intensity(self.rate_mm_h, "snowfall rate")

    @property
    def intensity(self) -> float:
        return self.rate_mm_h

    def specific_attenuation(self, f: Frequency, allow_extrapolation: bool = False, **_) -> AttenuationRate:
        return snow_specific_attenuation(f, self.rate_mm_h, allow_extrapolation=allow_extrapolation)

    def spec(self) -> str:
        return f"snow:{self.rate_mm_h:g}"


WeatherCondition = Union[Clear, Rain, Fog, DrySnow]

WEATHER_GRAMMAR = "clear | rain:<mm/h> | fog:<g/m^3> | snow:<mm/h>"


def parse_weather(text: str, geometry: PolarizationGeometry = CIRCULAR,
                  fog_temperature_k: float = FOG_TEMPERATURE_K) -> WeatherCondition:
    """Parse ``kind:intensity`` (e.g. ``rain:12.5``) or ``clear``."""
    kind, _, value = text.strip().lower().partition(":")
    if kind == "clear" and not value:
        return Clear()
    if kind not in ("rain", "fog", "snow") or not value:
        raise ValueError(f"invalid weather spec {text!r}; expected {WEATHER_GRAMMAR}")
    try:
        intensity = float(value)
    except ValueError:
        raise ValueError(f"invalid weather intensity in {text!r}; expected {WEATHER_GRAMMAR}") from None
    if not math.isfinite(intensity) or intensity < 0:
        raise ValueError(f"weather intensity must be finite and non-negative in {text!r}")
    if kind == "rain":
        return Rain(intensity, geometry)
    if kind == "fog":
        return Fog(intensity, fog_temperature_k)
    return DrySnow(intensity)
