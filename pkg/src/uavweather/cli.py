"""Command-line front end: one subcommand per model, CSV or JSON sweep output.

Exit codes: 0 success, 2 usage error, 3 model-domain error, 4 data-file error.

A scenario is resolved in three layers: per-command defaults, then the
``--config`` file (a JSON scenario or any earlier output of this tool), then
explicit flags. The resolved scenario is echoed in the output header.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .errors import DataFileError, DomainError
from .scenario import Range, ScenarioConfig, load_scenario, run
from .weather import WEATHER_GRAMMAR, parse_weather

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_DATA = 4

COMMAND_DEFAULTS: dict[str, dict[str, Any]] = {
    "atten": {
        "frequencies_ghz": [2.0, 5.0, 28.0],
        "weather": ["rain:12.5", "fog:0.05", "snow:5"],
        "distance": "0.1:10:0.1",
    },
    "gas": {"frequencies_ghz": "1:1000:1", "weather": []},
    "pathloss": {
        "frequencies_ghz": [2.0, 28.0, 60.0],
        "weather": ["rain:12.5", "fog:0.05", "snow:5"],
        "distance": "0.1:10:0.1",
    },
    "a2g": {"frequencies_ghz": [28.0], "weather": [], "altitude": "100:500:100", "radius": "10:5000:10"},
    "coverage": {
        "frequencies_ghz": [28.0, 60.0],
        "weather": ["rain:12.5", "fog:0.05", "snow:5"],
        "altitude": "0:5000:10",
    },
    "linkbudget": {
        "frequencies_ghz": [2.0, 60.0, 300.0],
        "weather": ["rain:12.5"],
        "distance": "10:2000:10",
        "altitude": "100",
    },
    "array": {"frequencies_ghz": [2.0, 28.0, 60.0, 300.0], "weather": []},
}

HELP = {
    "atten": "LoS path loss versus distance under clear air, rain, fog and snow",
    "gas": "oxygen and water-vapour specific attenuation versus frequency",
    "pathloss": "free-space, gaseous and weather components of LoS path loss",
    "a2g": "probabilistic LoS/NLoS air-to-ground path loss over altitude and radius",
    "coverage": "coverage radius versus UAV altitude per weather condition",
    "linkbudget": "received power, noise and SNR versus distance",
    "array": "fixed-aperture array size and gain per frequency",
}


def parse_frequencies(text: str) -> list[float]:
    """Comma list of GHz values; each item may be a ``start:stop:step`` range."""
    out: list[float] = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        out.extend(Range.parse(item).values())
    if not out:
        raise ValueError(f"no frequencies in {text!r}")
    return out


def _freq_arg(text: str) -> list[float]:
    try:
        return parse_frequencies(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _weather_arg(text: str) -> list[str]:
    items = [w.strip() for w in text.split(",") if w.strip()]
    for item in items:
        try:
            parse_weather(item)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None
    return items


def _atmosphere_arg(text: str) -> list[float]:
    try:
        values = [float(x) for x in text.split(",")]
    except ValueError:
        values = []
    if len(values) != 3:
        raise argparse.ArgumentTypeError("expected PRESSURE_HPA,TEMPERATURE_K,VAPOUR_DENSITY_G_M3")
    return values


def _range_arg(text: str) -> str:
    try:
        Range.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return text


def _global_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    S = argparse.SUPPRESS
    g = p.add_argument_group("scenario")
    g.add_argument("--freq", dest="frequencies_ghz", type=_freq_arg, default=S,
                   help="frequencies in GHz, e.g. 2,28,60 or 1:1000:1")
    g.add_argument("--weather", type=_weather_arg, default=S, help=f"comma list of {WEATHER_GRAMMAR}")
    g.add_argument("--env", dest="environment", default=S,
                   help="A2G environment preset (suburban, urban, dense_urban, highrise_urban)")
    g.add_argument("--atmosphere", type=_atmosphere_arg, default=S,
                   help="total pressure hPa, temperature K, vapour density g/m^3 (default 1013.25,288.15,7.5)")
    g.add_argument("--format", choices=("csv", "json"), default=S)
    g.add_argument("--out", default=None, help="write to this file instead of stdout")
    g.add_argument("--config", default=None, help="JSON scenario file or an earlier output to replay")

    s = p.add_argument_group("sweep and radio")
    s.add_argument("--distance", type=_range_arg, default=S,
                   help="start:stop:step; km for atten/pathloss, m for linkbudget")
    s.add_argument("--altitude", type=_range_arg, default=S, help="UAV altitude grid in m")
    s.add_argument("--radius", type=_range_arg, default=S, help="ground radius grid in m (a2g)")
    s.add_argument("--tx-power", dest="transmit_power_dbm", type=float, default=S)
    s.add_argument("--front-end-loss", dest="front_end_loss_db", type=float, default=S)
    s.add_argument("--noise-figure", dest="noise_figure_db", type=float, default=S)
    s.add_argument("--bandwidth", dest="bandwidth_hz", type=float, default=S)
    s.add_argument("--aperture", dest="aperture_m", type=float, default=S, help="array side length in m")
    s.add_argument("--eps-eff", dest="effective_permittivity", type=float, default=S)
    s.add_argument("--snr-min", dest="snr_min_db", type=float, default=S)
    s.add_argument("--pl-max", dest="pl_max_db", type=float, default=S,
                   help="tolerable path loss in dB; overrides the link-budget threshold")
    s.add_argument("--radius-cap", dest="radius_cap_m", type=float, default=S)
    s.add_argument("--model", choices=("los", "a2g"), default=S, help="linkbudget path-loss model")
    s.add_argument("--rain-elevation", dest="rain_elevation_deg", type=float, default=S)
    s.add_argument("--rain-tilt", dest="rain_tilt_deg", type=float, default=S)
    s.add_argument("--fog-temperature", dest="fog_temperature_k", type=float, default=S)
    s.add_argument("--allow-snow-extrapolation", dest="allow_snow_extrapolation",
                   action="store_true", default=S,
                   help="evaluate the snow model outside its validity window")
    return p


def build_parser() -> argparse.ArgumentParser:
    parent = _global_flags()
    parser = argparse.ArgumentParser(prog="uavweather", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name in COMMAND_DEFAULTS:
        sub.add_parser(name, parents=[parent], help=HELP[name], description=HELP[name])
    return parser


def resolve_scenario(ns: argparse.Namespace) -> ScenarioConfig:
    data: dict[str, Any] = ScenarioConfig().to_dict()
    data.update(COMMAND_DEFAULTS[ns.command])
    if isinstance(data["frequencies_ghz"], str):
        data["frequencies_ghz"] = parse_frequencies(data["frequencies_ghz"])
    if ns.config:
        data.update(load_scenario(ns.config).to_dict())
    flags = {k: v for k, v in vars(ns).items() if k not in ("command", "out", "config")}
    data.update(flags)
    data["command"] = ns.command
    return ScenarioConfig.from_dict(data)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)  # exits with status 2 on usage errors
    try:
        cfg = resolve_scenario(ns)
        table = run(cfg)
        text = table.render(cfg.format)
    except DataFileError as exc:
        print(f"uavweather: data file error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except DomainError as exc:
        print(f"uavweather: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ValueError, KeyError, json.JSONDecodeError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"uavweather: error: {msg}", file=sys.stderr)
        return EXIT_USAGE

    if ns.out:
        with open(ns.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
