"""Acceptance criteria 1-10, one PASS/FAIL line each.

Run under pytest (lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``.
"""
import math
import subprocess
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))
from conftest import read_fixture  # noqa: E402

from uavweather import AttenuationRate, Frequency, Length, ModelRangeError
from uavweather.a2g import (
    aerial_path_loss,
    aerial_path_loss_db,
    aerial_path_loss_grouped,
    aerial_path_loss_weather,
    environment,
    los_probability,
)
from uavweather.coverage import altitude_grid, coverage_curve, coverage_radius, max_path_loss
from uavweather.gas import AtmosphereState, gas_specific_attenuation
from uavweather.link_budget import RadioSystem, array_design, noise_power, received_power, snr
from uavweather.propagation import path_loss_mw
from uavweather.weather import (
    fog_permittivity,
    fog_specific_attenuation,
    rain_power_law,
    rain_specific_attenuation,
    snow_specific_attenuation,
)

GHz = Frequency.from_ghz
URBAN = environment("urban")
RAIN, FOG, SNOW_MMWAVE, SNOW_THZ = 12.5, 0.05, 5.0, 0.5
SNR_MIN_DB = 10.0

RESULTS: dict[int, tuple[bool, str, str]] = {}


def record(n, title, ok, detail):
    RESULTS[n] = (ok, title, detail)
    assert ok, f"criterion {n} ({title}) failed: {detail}"


# -- 1 ----------------------------------------------------------------------

def check_antenna_design():
    out, ok = [], True
    for f, n_exp, g_exp in ((60, 40, 36.0), (300, 200, 50.0), (2, 1, None)):
        d = array_design(GHz(f), Length.from_cm(10))
        good = d.n_side == n_exp and (g_exp is None or abs(d.gain_db - g_exp) <= 0.1)
        ok &= good
        out.append(f"{f} GHz N_side={d.n_side} G={d.gain_db:.2f} dB")
    return ok, "; ".join(out)


# -- 2 ----------------------------------------------------------------------

def check_rain_coefficients():
    worst, where = 0.0, ""
    for row in read_fixture("rain_p838_table.csv"):
        for family in ("kH", "alphaH", "kV", "alphaV"):
            got = rain_power_law(GHz(row["freq_ghz"]), family=family)
            rel = abs(got - row[family]) / row[family]
            if rel > worst:
                worst, where = rel, f"{family} at {row['freq_ghz']:g} GHz"
    return worst <= 1e-3, f"worst relative error {worst:.2e} ({where}) over 12 frequencies x 4 families"


# -- 3 ----------------------------------------------------------------------

def check_gas_model():
    worksheet = AtmosphereState(1013.25, 288.15, 7.5)
    worst = 0.0
    for row in read_fixture("gas_p676_validation.csv"):
        br = gas_specific_attenuation(GHz(row["freq_ghz"]), worksheet)
        worst = max(
            worst,
            abs(br.oxygen.db_per_km / row["gamma_oxygen_db_km"] - 1),
            abs(br.water_vapour.db_per_km / row["gamma_water_db_km"] - 1),
        )
    beta = {f: gas_specific_attenuation(GHz(f)).total.db_per_km for f in (39, 60, 100)}
    peak = beta[60] > beta[39] and beta[60] > beta[100]
    detail = (
        f"worst relative error {worst:.2e} at 5 worksheet frequencies; "
        f"beta(39/60/100 GHz) = {beta[39]:.3f}/{beta[60]:.2f}/{beta[100]:.3f} dB/km"
    )
    return worst <= 5e-3 and peak, detail


# -- 4, 5 ---------------------------------------------------------------------

def _gammas(f, snow_rate):
    fr = GHz(f)
    return (
        rain_specific_attenuation(fr, RAIN).db_per_km,
        snow_specific_attenuation(fr, snow_rate).db_per_km,
        fog_specific_attenuation(fr, FOG).db_per_km,
    )


def check_mmwave_ordering():
    ok, out = True, []
    for f in (39, 60, 100):
        rain, snow, fog = _gammas(f, SNOW_MMWAVE)
        ok &= rain > snow > fog
        out.append(f"{f} GHz rain {rain:.3f} > snow {snow:.3f} > fog {fog:.3f}")
    return ok, "; ".join(out)


def check_near_thz_ordering():
    rain, snow, fog = _gammas(188, SNOW_MMWAVE)
    return snow > rain > fog, f"188 GHz snow {snow:.2f} > rain {rain:.2f} > fog {fog:.3f} dB/km"


# -- 6 ----------------------------------------------------------------------

def _threshold(f):
    radio = RadioSystem(f)
    gain = array_design(f).gain_db
    return max_path_loss(radio, gain, gain, SNR_MIN_DB)


def _max_radius(f, gamma):
    beta = gas_specific_attenuation(f).total
    curve = coverage_curve(altitude_grid(0, 5000, 10), _threshold(f), f, URBAN, beta, gamma)
    return curve.max_radius_m


def check_coverage_ordering():
    parts, ok = [], True
    for f_ghz in (28, 60):
        f = GHz(f_ghz)
        r = {
            "rain": _max_radius(f, rain_specific_attenuation(f, RAIN)),
            "fog": _max_radius(f, fog_specific_attenuation(f, FOG)),
            "snow": _max_radius(f, snow_specific_attenuation(f, SNOW_MMWAVE)),
        }
        good = r["rain"] < r["fog"] < r["snow"]
        ok &= good
        parts.append(
            f"{f_ghz} GHz rain {r['rain']:.0f} m, fog {r['fog']:.0f} m, snow {r['snow']:.0f} m "
            f"({'holds' if good else 'rain < fog < snow violated'})"
        )
    for f_ghz in (350, 900):
        f = GHz(f_ghz)
        try:
            snow_gamma = snow_specific_attenuation(f, SNOW_THZ)
            omitted = False
        except ModelRangeError:
            omitted = True
            snow_gamma = snow_specific_attenuation(f, SNOW_THZ, allow_extrapolation=True)
        r_snow = _max_radius(f, snow_gamma)
        others = [
            _max_radius(f, AttenuationRate(0.0)),
            _max_radius(f, rain_specific_attenuation(f, RAIN)),
            _max_radius(f, fog_specific_attenuation(f, FOG)),
        ]
        good = r_snow is not None and all(o is None or r_snow < o for o in others)
        ok &= good
        label = "omitted by default; extrapolated" if omitted else "in window"
        parts.append(f"{f_ghz} GHz snow ({label}) {r_snow:.0f} m smallest={good}")
    return ok, "; ".join(parts)


# -- 7 ----------------------------------------------------------------------

def check_solver_contract():
    worst_res, worst_rt, n = 0.0, 0.0, 0
    for f_ghz, gamma in ((2, 0.0), (28, 2.5), (60, 5.8), (300, 8.0)):
        f = GHz(f_ghz)
        radio = RadioSystem(f)
        gain = array_design(f).gain_db
        pl_max = max_path_loss(radio, gain, gain, SNR_MIN_DB)
        beta = gas_specific_attenuation(f).total
        rate = beta.db_per_km + gamma
        curve = coverage_curve(altitude_grid(0, 5000, 50), pl_max, f, URBAN, beta, AttenuationRate(gamma))
        for point in curve.points:
            if point is None:
                continue
            n += 1
            pl = aerial_path_loss_db(point.altitude.m, point.radius.m, f.hz, URBAN, rate)
            worst_res = max(worst_res, abs(pl - pl_max.value))
            got = snr(received_power(radio, gain, gain, pl), noise_power(radio)).value
            worst_rt = max(worst_rt, abs(got - SNR_MIN_DB))
    ok = n > 0 and worst_res <= 0.01 and worst_rt <= 0.02
    return ok, f"{n} points; max |PL - PL_max| = {worst_res:.2e} dB; max SNR round-trip error {worst_rt:.2e} dB"


# -- 8 ----------------------------------------------------------------------

def check_hand_values():
    noise = noise_power(RadioSystem(GHz(2), noise_figure_db=1.0, bandwidth_hz=100e6)).value
    snow = snow_specific_attenuation(GHz(60), 5).db_per_km
    eps = fog_permittivity(GHz(60), 293.15)
    p_los = los_probability(Length(100), Length(100), URBAN).los
    ok = (
        abs(noise + 92.86) <= 0.01
        and abs(snow / 0.756 - 1) <= 5e-3
        and abs(eps.eps0 - 80.0738) <= 1e-3
        and abs(eps.fp_ghz - 16.961) <= 1e-3
        and abs(p_los - 0.9677) <= 1e-4
    )
    detail = (
        f"N = {noise:.3f} dBm; snow(60 GHz, 5 mm/h) = {snow:.4f} dB/km; "
        f"eps0 = {eps.eps0:.4f}; f_p = {eps.fp_ghz:.4f} GHz; P_LoS(45 deg) = {p_los:.5f}"
    )
    return ok, detail


# -- 9 ----------------------------------------------------------------------

def check_properties():
    failures = []
    envs = [environment(n) for n in ("suburban", "urban", "dense_urban", "highrise_urban")]
    heights = [0.0, 10.0, 100.0, 1000.0, 5000.0]
    radii = [0.0, 1.0, 50.0, 500.0, 5000.0, 50000.0]

    for env in envs:
        for h in heights:
            for r in radii:
                s = los_probability(Length(h), Length(r), env)
                if abs(s.los + s.nlos - 1) > 1e-15:
                    failures.append("P_LoS + P_NLoS")
    for f in (2, 60, 188):
        if any(g != 0.0 for g in (
            rain_specific_attenuation(GHz(f), 0).db_per_km,
            fog_specific_attenuation(GHz(f), 0).db_per_km,
            snow_specific_attenuation(GHz(f), 0).db_per_km,
        )):
            failures.append("zero intensity")
    for f in (2, 28, 60, 100, 188):
        for lo, hi in ((0.1, 1.0), (1.0, 12.5), (12.5, 100.0)):
            for fn in (rain_specific_attenuation, snow_specific_attenuation):
                if not fn(GHz(f), hi).db_per_km > fn(GHz(f), lo).db_per_km:
                    failures.append(f"{fn.__name__} monotone")
            if not fog_specific_attenuation(GHz(f), hi).db_per_km > fog_specific_attenuation(GHz(f), lo).db_per_km:
                failures.append("fog monotone")
    for d in (0.1, 1.0, 10.0):
        a = path_loss_mw(GHz(60), Length.from_km(d), AttenuationRate(14.6)).total_db
        b = path_loss_mw(GHz(60), Length.from_km(d * 1.1), AttenuationRate(14.6)).total_db
        if not b > a:
            failures.append("PL monotone")
    radio = RadioSystem(GHz(60))
    snrs = [snr(received_power(radio, 36, 36, pl), noise_power(radio)).value for pl in (80, 100, 120)]
    if not snrs[0] > snrs[1] > snrs[2]:
        failures.append("SNR monotone")
    f28 = GHz(28)
    radii_by_gamma = [coverage_radius(Length(300), 130.0, f28, URBAN, weather=AttenuationRate(g)) for g in (0, 1, 5)]
    if not radii_by_gamma[0].radius.m > radii_by_gamma[1].radius.m > radii_by_gamma[2].radius.m:
        failures.append("radius monotone")

    worst_eq16, worst_group = 0.0, 0.0
    gas = AttenuationRate(0.1)
    for env in envs:
        for h in heights:
            for r in radii[1:]:
                hl, rl = Length(h), Length(r)
                clear = aerial_path_loss(hl, rl, f28, env, gas).value
                weather = aerial_path_loss_weather(hl, rl, f28, env, gas, AttenuationRate(0.0)).value
                worst_eq16 = max(worst_eq16, abs(clear - weather))
                wet = AttenuationRate(2.5)
                grouped = aerial_path_loss_grouped(hl, rl, f28, env, gas, wet).value
                weighted = aerial_path_loss_weather(hl, rl, f28, env, gas, wet).value
                worst_group = max(worst_group, abs(grouped - weighted))
    if worst_eq16 > 1e-12:
        failures.append("weather form at gamma=0")
    if worst_group > 1e-9:
        failures.append("grouped form")

    mixed = path_loss_mw(Frequency.from_mhz(2400), Length.from_km(1.5), AttenuationRate(0.3)).total_db
    si = path_loss_mw(Frequency(2.4e9), Length(1500.0), AttenuationRate(0.3)).total_db
    hand = 32.442 + 20 * math.log10(2400) + 20 * math.log10(1.5) + 0.45
    unit_err = max(abs(mixed - si), abs(mixed - hand))
    if unit_err > 1e-9:
        failures.append("unit mixing")

    detail = (
        f"gamma=0 reduction {worst_eq16:.1e} dB; (A, B) regrouping {worst_group:.1e} dB; "
        f"unit mixing {unit_err:.1e} dB; failures: {', '.join(sorted(set(failures))) or 'none'}"
    )
    return not failures, detail


# -- 10 ---------------------------------------------------------------------

def check_determinism(tmp_dir: Path):
    cmds = [
        ["atten", "--distance", "0.1:10:0.5"],
        ["coverage", "--freq", "28,60", "--altitude", "0:2000:100"],
        ["linkbudget", "--format", "json"],
    ]
    identical = 0
    for i, cmd in enumerate(cmds):
        outs = []
        for k in range(2):
            path = tmp_dir / f"run{i}_{k}.out"
            subprocess.run(
                [sys.executable, "-m", "uavweather.cli", *cmd, "--out", str(path)], check=True
            )
            outs.append(path.read_bytes())
        identical += outs[0] == outs[1]
    return identical == len(cmds), f"{identical}/{len(cmds)} subcommands byte-identical across two processes"


# -- pytest entry points ----------------------------------------------------

def test_criterion_01_antenna_design():
    record(1, "antenna design", *check_antenna_design())


def test_criterion_02_rain_coefficients():
    record(2, "rain coefficients vs published table", *check_rain_coefficients())


def test_criterion_03_gas_model():
    record(3, "gas model vs worksheet and 60 GHz peak", *check_gas_model())


def test_criterion_04_mmwave_weather_ordering():
    record(4, "mmWave ordering rain > snow > fog", *check_mmwave_ordering())


def test_criterion_05_near_thz_ordering():
    record(5, "188 GHz ordering snow > rain > fog", *check_near_thz_ordering())


def test_criterion_06_coverage_ordering():
    record(6, "coverage radius orderings", *check_coverage_ordering())


def test_criterion_07_solver_contract():
    record(7, "solver residual and SNR round trip", *check_solver_contract())


def test_criterion_08_hand_values():
    record(8, "hand-derived values", *check_hand_values())


def test_criterion_09_properties():
    record(9, "property suite", *check_properties())


def test_criterion_10_determinism(tmp_path):
    record(10, "byte-identical CLI output", *check_determinism(tmp_path))


def report_lines():
    lines = []
    for n in sorted(RESULTS):
        ok, title, detail = RESULTS[n]
        lines.append(f"{'PASS' if ok else 'FAIL'}  criterion {n:>2}: {title}: {detail}")
    return lines


if __name__ == "__main__":
    import tempfile

    checks = {
        1: ("antenna design", check_antenna_design),
        2: ("rain coefficients vs published table", check_rain_coefficients),
        3: ("gas model vs worksheet and 60 GHz peak", check_gas_model),
        4: ("mmWave ordering rain > snow > fog", check_mmwave_ordering),
        5: ("188 GHz ordering snow > rain > fog", check_near_thz_ordering),
        6: ("coverage radius orderings", check_coverage_ordering),
        7: ("solver residual and SNR round trip", check_solver_contract),
        8: ("hand-derived values", check_hand_values),
        9: ("property suite", check_properties),
    }
    for n, (title, fn) in checks.items():
        ok, detail = fn()
        RESULTS[n] = (ok, title, detail)
    with tempfile.TemporaryDirectory() as tmp:
        ok, detail = check_determinism(Path(tmp))
        RESULTS[10] = (ok, "byte-identical CLI output", detail)
    print("\n".join(report_lines()))
    sys.exit(0 if all(r[0] for r in RESULTS.values()) else 1)
