"""Scenario configuration and the sweeps behind each CLI subcommand.

Every ``run_*`` function is pure: the same ScenarioConfig and data files give
the same SweepTable. The resolved scenario is echoed in the table metadata,
so any output file can be fed back through ``--config`` to regenerate it.
"""
from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from . import __version__
from .a2g import aerial_path_loss_db, environment, los_nlos_path_loss, los_probability
from .coverage import RADIUS_CAP_M, coverage_curve, max_path_loss
from .gas import AtmosphereState, gas_specific_attenuation
from .itu_data import shipped_checksums
from .link_budget import RadioSystem, array_design, noise_power, received_power, snr
from .propagation import path_loss_mw
from .quantities import ZERO_RATE, AttenuationRate, Frequency, Length, wavelength
from .sweep import SweepTable, read_metadata
from .weather import PolarizationGeometry, WeatherCondition, parse_weather

__all__ = [
    "WEATHER_KINDS",
    "ScenarioConfig",
    "Range",
    "load_scenario",
    "run",
    "run_atten",
    "run_gas",
    "run_pathloss",
    "run_a2g",
    "run_coverage",
    "run_linkbudget",
    "run_array",
]

WEATHER_KINDS = ("rain", "fog", "snow")


@dataclass(frozen=True)
class Range:
    """Inclusive arithmetic grid ``start:stop:step``."""

    start: float
    stop: float
    step: float

    def __post_init__(self):
        if not self.step > 0:
            raise ValueError(f"range step must be positive, got {self.step}")
        if self.stop < self.start:
            raise ValueError(f"range must be increasing, got {self.start}:{self.stop}")

    @classmethod
    def parse(cls, text: str) -> Range:
        parts = text.split(":")
        if len(parts) == 1:
            value = float(parts[0])
            return cls(value, value, 1.0)
        if len(parts) != 3:
            raise ValueError(f"range must be start:stop:step, got {text!r}")
        return cls(*(float(p) for p in parts))

    def values(self) -> list[float]:
        n = int(round((self.stop - self.start) / self.step))
        # rounding keeps 0.1 + 9 * 0.1 from printing as 0.9999999999999999
        return [round(self.start + i * self.step, 9) for i in range(n + 1)]

    def to_text(self) -> str:
        return f"{self.start!r}:{self.stop!r}:{self.step!r}"


@dataclass
class ScenarioConfig:
    command: str = "atten"
    frequencies_ghz: list[float] = field(default_factory=lambda: [2.0, 5.0, 28.0])
    weather: list[str] = field(default_factory=lambda: ["rain:12.5", "fog:0.05", "snow:5"])
    # total pressure (hPa), temperature (K), vapour density (g/m^3)
    atmosphere: list[float] = field(default_factory=lambda: [1013.25, 288.15, 7.5])
    environment: str = "urban"
    rain_elevation_deg: float = 0.0
    rain_tilt_deg: float = 45.0
    fog_temperature_k: float = 293.15
    allow_snow_extrapolation: bool = False
    distance: str = "0.1:10:0.1"  # km for atten/pathloss, m for linkbudget
    altitude: str = "0:5000:10"  # m
    radius: str = "10:5000:10"  # m
    transmit_power_dbm: float = 45.0
    front_end_loss_db: float = 1.0
    noise_figure_db: float | None = None
    bandwidth_hz: float = 100e6
    aperture_m: float = 0.10
    effective_permittivity: float = 1.0
    snr_min_db: float = 10.0
    pl_max_db: float | None = None
    radius_cap_m: float = RADIUS_CAP_M
    model: str = "los"  # linkbudget path-loss model: "los" or "a2g"
    format: str = "csv"

    def __post_init__(self):
        # normalise so that a JSON round trip reproduces the same echo
        self.frequencies_ghz = [float(f) for f in self.frequencies_ghz]
        self.weather = [str(w) for w in self.weather]
        self.atmosphere = [float(x) for x in self.atmosphere]
        for name in ("rain_elevation_deg", "rain_tilt_deg", "fog_temperature_k", "transmit_power_dbm",
                     "front_end_loss_db", "bandwidth_hz", "aperture_m", "effective_permittivity",
                     "snr_min_db", "radius_cap_m"):
            setattr(self, name, float(getattr(self, name)))
        for name in ("noise_figure_db", "pl_max_db"):
            if getattr(self, name) is not None:
                setattr(self, name, float(getattr(self, name)))
        self.validate()

    def validate(self) -> None:
        if not self.frequencies_ghz:
            raise ValueError("at least one frequency is required")
        for f in self.frequencies_ghz:
            Frequency.from_ghz(f)
        for spec in self.weather:
            parse_weather(spec)
        kinds = [parse_weather(s).kind for s in self.weather]
        if len(kinds) != len(set(kinds)):
            raise ValueError("each weather kind may be given at most once")
        environment(self.environment)
        for text in (self.distance, self.altitude, self.radius):
            Range.parse(text)
        if len(self.atmosphere) != 3:
            raise ValueError("atmosphere is total_pressure_hPa,temperature_K,vapour_density_g_m3")
        if self.model not in ("los", "a2g"):
            raise ValueError(f"unknown path-loss model {self.model!r}")
        if self.format not in ("csv", "json"):
            raise ValueError(f"unknown output format {self.format!r}")

    # -- resolution helpers -------------------------------------------------

    def to_dict(self) -> dict[str, Any]:
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ScenarioConfig:
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown scenario field(s): {', '.join(sorted(unknown))}")
        return cls(**data)

    @property
    def frequencies(self) -> list[Frequency]:
        return [Frequency.from_ghz(f) for f in self.frequencies_ghz]

    @property
    def atmosphere_state(self) -> AtmosphereState:
        return AtmosphereState.from_total_pressure(*self.atmosphere)

    @property
    def geometry(self) -> PolarizationGeometry:
        return PolarizationGeometry(self.rain_elevation_deg, self.rain_tilt_deg)

    def conditions(self) -> list[WeatherCondition]:
        return [parse_weather(s, self.geometry, self.fog_temperature_k) for s in self.weather]

    def condition_for(self, kind: str) -> WeatherCondition | None:
        for cond in self.conditions():
            if cond.kind == kind:
                return cond
        return None

    def weather_rate(self, cond: WeatherCondition | None, f: Frequency) -> AttenuationRate:
        if cond is None:
            return ZERO_RATE
        return cond.specific_attenuation(f, allow_extrapolation=self.allow_snow_extrapolation)

    def radio(self, f: Frequency) -> RadioSystem:
        return RadioSystem(
            f,
            transmit_power_dbm=self.transmit_power_dbm,
            rx_front_end_loss_db=self.front_end_loss_db,
            tx_front_end_loss_db=self.front_end_loss_db,
            noise_figure_db=self.noise_figure_db,
            bandwidth_hz=self.bandwidth_hz,
            aperture=Length(self.aperture_m),
            effective_permittivity=self.effective_permittivity,
        )


def load_scenario(path: str | Path) -> ScenarioConfig:
    """Load a JSON scenario file, or the scenario echoed in a previous output."""
    text = Path(path).read_text(encoding="utf-8")
    stripped = text.lstrip()
    if stripped.startswith("#"):
        data = read_metadata(text)["scenario"]
    else:
        doc = json.loads(stripped)
        data = doc["metadata"]["scenario"] if "metadata" in doc else doc
    return ScenarioConfig.from_dict(data)


def _table(cfg: ScenarioConfig, columns: list[str], units: list[str]) -> SweepTable:
    meta = {
        "tool": f"uavweather {__version__}",
        "command": cfg.command,
        "data_sha256": shipped_checksums(),
        "scenario": cfg.to_dict(),
    }
    return SweepTable(columns, units, metadata=meta)


def _gas(cfg: ScenarioConfig, f: Frequency) -> AttenuationRate:
    return gas_specific_attenuation(f, cfg.atmosphere_state).total


def _labelled_conditions(cfg: ScenarioConfig) -> list[tuple[str, WeatherCondition | None]]:
    out: list[tuple[str, WeatherCondition | None]] = [("clear", None)]
    out += [(c.spec(), c) for c in cfg.conditions() if c.kind != "clear"]
    return out


def run_atten(cfg: ScenarioConfig) -> SweepTable:
    """Multi-weather LoS path loss versus distance, one block per frequency."""
    table = _table(
        cfg,
        ["freq_ghz", "distance_km", "pl_clear_db", "pl_rain_db", "pl_fog_db", "pl_snow_db"],
        ["GHz", "km", "dB", "dB", "dB", "dB"],
    )
    distances = [Length.from_km(d) for d in Range.parse(cfg.distance).values()]
    for f in cfg.frequencies:
        beta = _gas(cfg, f)
        rates = [cfg.weather_rate(cfg.condition_for(k), f) for k in WEATHER_KINDS]
        for d in distances:
            clear = path_loss_mw(f, d, beta).total_db
            weathered = [path_loss_mw(f, d, beta, g).total_db for g in rates]
            table.append([f.ghz, d.km, clear, *weathered])
    return table


def run_gas(cfg: ScenarioConfig) -> SweepTable:
    table = _table(
        cfg,
        ["freq_ghz", "beta_oxygen_db_km", "beta_water_db_km", "beta_total_db_km"],
        ["GHz", "dB/km", "dB/km", "dB/km"],
    )
    atmos = cfg.atmosphere_state
    for f in cfg.frequencies:
        br = gas_specific_attenuation(f, atmos)
        table.append([f.ghz, br.oxygen.db_per_km, br.water_vapour.db_per_km, br.total.db_per_km])
    return table


def run_pathloss(cfg: ScenarioConfig) -> SweepTable:
    table = _table(
        cfg,
        ["freq_ghz", "weather", "distance_km", "free_space_db", "gas_db", "weather_db", "total_db"],
        ["GHz", "", "km", "dB", "dB", "dB", "dB"],
    )
    distances = [Length.from_km(d) for d in Range.parse(cfg.distance).values()]
    for f in cfg.frequencies:
        beta = _gas(cfg, f)
        for label, cond in _labelled_conditions(cfg):
            gamma = cfg.weather_rate(cond, f)
            for d in distances:
                br = path_loss_mw(f, d, beta, gamma)
                table.append([f.ghz, label, d.km, br.free_space_db, br.gas_db, br.weather_db, br.total_db])
    return table


def run_a2g(cfg: ScenarioConfig) -> SweepTable:
    table = _table(
        cfg,
        ["freq_ghz", "weather", "h_m", "r_m", "d_m", "p_los", "pl_los_db", "pl_nlos_db", "pl_db"],
        ["GHz", "", "m", "m", "m", "", "dB", "dB", "dB"],
    )
    env = environment(cfg.environment)
    altitudes = Range.parse(cfg.altitude).values()
    radii = Range.parse(cfg.radius).values()
    for f in cfg.frequencies:
        beta = _gas(cfg, f)
        for label, cond in _labelled_conditions(cfg):
            rate = beta.db_per_km + cfg.weather_rate(cond, f).db_per_km
            for h in altitudes:
                for r in radii:
                    hl, rl = Length(h), Length(r)
                    d = Length((h * h + r * r) ** 0.5)
                    if d.m == 0:
                        continue
                    p = los_probability(hl, rl, env).los
                    pl_los, pl_nlos = los_nlos_path_loss(f, d, env)
                    pl = aerial_path_loss_db(h, r, f.hz, env, rate)
                    table.append([f.ghz, label, h, r, d.m, p, pl_los.value, pl_nlos.value, pl])
    return table


def _threshold(cfg: ScenarioConfig, f: Frequency) -> float:
    if cfg.pl_max_db is not None:
        return float(cfg.pl_max_db)
    gain = array_design(f, Length(cfg.aperture_m), cfg.effective_permittivity).gain_db
    return max_path_loss(cfg.radio(f), gain, gain, cfg.snr_min_db).value


def run_coverage(cfg: ScenarioConfig) -> SweepTable:
    """Coverage radius versus altitude for clear air and each weather kind."""
    radius_cols = [f"radius_{k}_m" for k in ("clear", *WEATHER_KINDS)]
    status_cols = [f"status_{k}" for k in ("clear", *WEATHER_KINDS)]
    table = _table(
        cfg,
        ["freq_ghz", "h_m", *radius_cols, *status_cols],
        ["GHz", "m", *(["m"] * len(radius_cols)), *([""] * len(status_cols))],
    )
    env = environment(cfg.environment)
    grid = Range.parse(cfg.altitude).values()
    thresholds: dict[str, float] = {}
    optima: dict[str, dict[str, Any]] = {}
    for f in cfg.frequencies:
        beta = _gas(cfg, f)
        pl_max = _threshold(cfg, f)
        thresholds[repr(f.ghz)] = pl_max
        curves = {}
        for kind in ("clear", *WEATHER_KINDS):
            cond = cfg.condition_for(kind) if kind != "clear" else None
            if kind != "clear" and cond is None:
                continue
            gamma = cfg.weather_rate(cond, f)
            curves[kind] = coverage_curve(grid, pl_max, f, env, beta, gamma, cfg.radius_cap_m)
        optima[repr(f.ghz)] = {
            kind: {"h_m": c.best_altitude_m, "radius_m": c.max_radius_m} for kind, c in curves.items()
        }
        for i, h in enumerate(grid):
            radii, statuses = [], []
            for kind in ("clear", *WEATHER_KINDS):
                curve = curves.get(kind)
                if curve is None:
                    radii.append(None)
                    statuses.append("not_requested")
                    continue
                point = curve.points[i]
                radii.append(None if point is None else point.radius.m)
                statuses.append(curve.statuses[i])
            table.append([f.ghz, h, *radii, *statuses])
    table.metadata["pl_max_db"] = thresholds
    table.metadata["optimum"] = optima
    return table


def run_linkbudget(cfg: ScenarioConfig) -> SweepTable:
    """Received power, noise and SNR versus distance per frequency/weather pair."""
    table = _table(
        cfg,
        ["freq_ghz", "weather", "distance_m", "pl_db", "pr_dbm", "noise_dbm", "snr_db"],
        ["GHz", "", "m", "dB", "dBm", "dBm", "dB"],
    )
    env = environment(cfg.environment) if cfg.model == "a2g" else None
    altitude = Range.parse(cfg.altitude).start
    distances = Range.parse(cfg.distance).values()
    arrays = {}
    for f in cfg.frequencies:
        radio = cfg.radio(f)
        design = array_design(f, Length(cfg.aperture_m), cfg.effective_permittivity)
        gain = design.gain_db
        arrays[repr(f.ghz)] = {
            "n_side": design.n_side,
            "n_elements": design.n_elements,
            "gain_db": gain,
            "noise_figure_db": radio.noise_figure_db,
        }
        noise = noise_power(radio)
        beta = _gas(cfg, f)
        for label, cond in _labelled_conditions(cfg):
            gamma = cfg.weather_rate(cond, f)
            for dist in distances:
                if env is None:
                    pl = path_loss_mw(f, Length(dist), beta, gamma).total_db
                else:
                    rate = beta.db_per_km + gamma.db_per_km
                    pl = aerial_path_loss_db(altitude, dist, f.hz, env, rate)
                pr = received_power(radio, gain, gain, pl)
                table.append([f.ghz, label, dist, pl, pr.value, noise.value, snr(pr, noise).value])
    table.metadata["array"] = arrays
    return table


def run_array(cfg: ScenarioConfig) -> SweepTable:
    table = _table(
        cfg,
        ["freq_ghz", "wavelength_mm", "element_size_mm", "n_side", "n_elements", "gain_db"],
        ["GHz", "mm", "mm", "", "", "dB"],
    )
    for f in cfg.frequencies:
        design = array_design(f, Length(cfg.aperture_m), cfg.effective_permittivity)
        lam_mm = wavelength(f).mm
        table.append(
            [f.ghz, lam_mm, design.element_size.mm, design.n_side, design.n_elements, design.gain_db]
        )
    return table


RUNNERS = {
    "atten": run_atten,
    "gas": run_gas,
    "pathloss": run_pathloss,
    "a2g": run_a2g,
    "coverage": run_coverage,
    "linkbudget": run_linkbudget,
    "array": run_array,
}


def run(cfg: ScenarioConfig) -> SweepTable:
    try:
        runner = RUNNERS[cfg.command]
    except KeyError:
        raise ValueError(f"unknown command {cfg.command!r}") from None
    return runner(cfg)
