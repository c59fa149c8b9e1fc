"""Probabilistic LoS/NLoS air-to-ground path loss.

The LoS probability is a sigmoid in the elevation angle (degrees) seen from
the ground user. Mean path loss weights the LoS and NLoS free-space losses by
those probabilities and adds gaseous and weather attenuation along the slant
path.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .errors import DataFileError, DomainError
from .itu_data import shipped_data_path
from .quantities import (
    SPEED_OF_LIGHT,
    ZERO_RATE,
    AttenuationRate,
    DecibelValue,
    Frequency,
    Length,
    slant_distance,
)

__all__ = [
    "A2GEnvironment",
    "LosSplit",
    "load_environments",
    "environment",
    "elevation_deg",
    "los_probability",
    "free_space_loss_db",
    "los_nlos_path_loss",
    "aerial_path_loss",
    "aerial_path_loss_weather",
    "aerial_path_loss_grouped",
    "aerial_path_loss_db",
]


@dataclass(frozen=True)
class A2GEnvironment:
    a: float
    b: float
    eta_los_db: float
    eta_nlos_db: float
    label: str = "custom"
    provenance: str = ""

    def __post_init__(self):
        if not (self.a > 0 and self.b > 0):
            raise DomainError(f"environment needs a > 0 and b > 0, got a={self.a}, b={self.b}")
        if not self.eta_nlos_db >= self.eta_los_db >= 0:
            raise DomainError(
                f"environment needs eta_NLoS >= eta_LoS >= 0, got {self.eta_los_db}, {self.eta_nlos_db}"
            )


@dataclass(frozen=True)
class LosSplit:
    los: float

    @property
    def nlos(self) -> float:
        return 1.0 - self.los


def load_environments(source: str | Path | None = None) -> dict[str, A2GEnvironment]:
    """Read environment presets from a JSON list of objects."""
    path = Path(source) if source is not None else shipped_data_path("a2g_environments.json")
    try:
        entries = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise DataFileError(f"cannot load environment presets from {path}: {exc}") from exc
    presets = {}
    for i, entry in enumerate(entries):
        try:
            env = A2GEnvironment(
                a=float(entry["a"]),
                b=float(entry["b"]),
                eta_los_db=float(entry["eta_los_db"]),
                eta_nlos_db=float(entry["eta_nlos_db"]),
                label=str(entry["label"]),
                provenance=str(entry.get("provenance", "")),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise DataFileError(f"{path}: preset #{i} is malformed: {exc}") from exc
        presets[env.label] = env
    return presets


@lru_cache(maxsize=None)
def _shipped_environments() -> dict[str, A2GEnvironment]:
    return load_environments()


def environment(label: str) -> A2GEnvironment:
    presets = _shipped_environments()
    try:
        return presets[label]
    except KeyError:
        raise KeyError(f"unknown environment {label!r}; choose from {', '.join(presets)}") from None


def elevation_deg(h_m: float, r_m: float) -> float:
    if r_m < 0 or h_m < 0:
        raise DomainError("altitude and ground radius must be non-negative")
    if r_m == 0:
        return 90.0
    return math.degrees(math.atan(h_m / r_m))


def _p_los(theta_deg: float, env: A2GEnvironment) -> float:
    return 1.0 / (1.0 + env.a * math.exp(-env.b * (theta_deg - env.a)))


def los_probability(h: Length, r: Length, env: A2GEnvironment) -> LosSplit:
    """LoS/NLoS split at ground radius `r` from a UAV at altitude `h`.

    At r = 0 the elevation is taken as its 90 degree limit.
    """
    return LosSplit(_p_los(elevation_deg(h.m, r.m), env))


def free_space_loss_db(f: Frequency, d: Length) -> float:
    if d.m <= 0:
        raise DomainError("free-space loss is undefined at zero distance")
    return 20 * math.log10(4 * math.pi * f.hz * d.m / SPEED_OF_LIGHT)


def los_nlos_path_loss(f: Frequency, d: Length, env: A2GEnvironment) -> tuple[DecibelValue, DecibelValue]:
    fs = free_space_loss_db(f, d)
    return DecibelValue.db(fs + env.eta_los_db), DecibelValue.db(fs + env.eta_nlos_db)


def aerial_path_loss_db(
    h_m: float, r_m: float, f_hz: float, env: A2GEnvironment, rate_db_km: float = 0.0
) -> float:
    """Float-only core used by sweeps and the coverage solver."""
    d = math.hypot(h_m, r_m)
    if d == 0:
        raise DomainError("UAV and user coincide")
    p = _p_los(elevation_deg(h_m, r_m), env)
    fs = 20 * math.log10(4 * math.pi * f_hz * d / SPEED_OF_LIGHT)
    return (
        (fs + env.eta_los_db) * p
        + (fs + env.eta_nlos_db) * (1 - p)
        + rate_db_km * d / 1000.0
    )


def aerial_path_loss(
    h: Length, r: Length, f: Frequency, env: A2GEnvironment, gas: AttenuationRate = ZERO_RATE
) -> DecibelValue:
    """Mean A2G path loss in clear air (gaseous absorption only)."""
    return aerial_path_loss_weather(h, r, f, env, gas, ZERO_RATE)


def aerial_path_loss_weather(
    h: Length,
    r: Length,
    f: Frequency,
    env: A2GEnvironment,
    gas: AttenuationRate = ZERO_RATE,
    weather: AttenuationRate = ZERO_RATE,
) -> DecibelValue:
    """Mean A2G path loss with gaseous and weather attenuation over the slant path."""
    d = slant_distance(h, r)
    split = los_probability(h, r, env)
    pl_los, pl_nlos = los_nlos_path_loss(f, d, env)
    mean = pl_los.value * split.los + pl_nlos.value * split.nlos
    return DecibelValue.db(mean + (gas.db_per_km + weather.db_per_km) * d.m / 1000.0)


def aerial_path_loss_grouped(
    h: Length,
    r: Length,
    f: Frequency,
    env: A2GEnvironment,
    gas: AttenuationRate = ZERO_RATE,
    weather: AttenuationRate = ZERO_RATE,
) -> DecibelValue:
    """Same quantity as :func:`aerial_path_loss_weather`, written as

    A * P_LoS + 20 log10(r / cos(theta)) + B + (beta + gamma) d / 1000

    with A = eta_LoS - eta_NLoS and B = 20 log10(4 pi f / c) + eta_NLoS.
    The cosine takes the elevation in radians; r / cos(theta) is the slant
    distance. Requires r > 0.
    """
    if r.m <= 0:
        raise DomainError("grouped form needs a positive ground radius")
    theta = math.atan(h.m / r.m)
    big_a = env.eta_los_db - env.eta_nlos_db
    big_b = 20 * math.log10(4 * math.pi * f.hz / SPEED_OF_LIGHT) + env.eta_nlos_db
    d_m = r.m / math.cos(theta)
    p = _p_los(math.degrees(theta), env)
    rate = gas.db_per_km + weather.db_per_km
    return DecibelValue.db(big_a * p + 20 * math.log10(d_m) + big_b + rate * d_m / 1000.0)
