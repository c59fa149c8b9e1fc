"""Render the CSV tables written by reproduce.sh as PNG plots.

Usage: python scripts/plot_figures.py [results_dir]
"""
import csv
import sys
from collections import defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def load(path):
    lines = [l for l in path.read_text().splitlines() if not l.startswith("#")]
    rows = list(csv.reader(lines))
    header, units, body = rows[0], rows[1], rows[2:]
    return header, units, [dict(zip(header, r)) for r in body]


def num(v):
    return float(v) if v != "" else float("nan")


def plot_loss(path, ax):
    _, _, rows = load(path)
    by_freq = defaultdict(list)
    for r in rows:
        by_freq[r["freq_ghz"]].append(r)
    for freq, group in by_freq.items():
        d = [num(r["distance_km"]) for r in group]
        for col, style in (("pl_clear_db", ":"), ("pl_rain_db", "-"), ("pl_fog_db", "--"), ("pl_snow_db", "-.")):
            y = [num(r[col]) for r in group]
            if y != [num(r["pl_clear_db"]) for r in group] or col == "pl_clear_db":
                ax.plot(d, y, style, label=f"{float(freq):g} GHz {col[3:-3]}")
    ax.set(xlabel="distance (km)", ylabel="path loss (dB)", xscale="log")


def plot_coverage(path, ax):
    _, _, rows = load(path)
    by_freq = defaultdict(list)
    for r in rows:
        by_freq[r["freq_ghz"]].append(r)
    for freq, group in by_freq.items():
        h = [num(r["h_m"]) for r in group]
        for kind in ("clear", "rain", "fog", "snow"):
            if group[0][f"status_{kind}"] == "not_requested":
                continue
            ax.plot([num(r[f"radius_{kind}_m"]) for r in group], h, label=f"{float(freq):g} GHz {kind}")
    ax.set(xlabel="coverage radius (m)", ylabel="altitude (m)")


def plot_snr(path, ax):
    _, _, rows = load(path)
    groups = defaultdict(list)
    for r in rows:
        groups[(r["freq_ghz"], r["weather"])].append(r)
    for (freq, weather), group in groups.items():
        ax.plot([num(r["distance_m"]) for r in group], [num(r["snr_db"]) for r in group],
                label=f"{float(freq):g} GHz {weather}")
    ax.set(xlabel="distance (m)", ylabel="SNR (dB)")


def plot_columns(path, ax, x, ys, **labels):
    _, _, rows = load(path)
    for y in ys:
        ax.plot([num(r[x]) for r in rows], [num(r[y]) for r in rows], label=y)
    ax.set(**labels)


def main(argv):
    results = Path(argv[1] if len(argv) > 1 else "results")
    jobs = {
        "loss_2_5_28ghz": plot_loss,
        "loss_39_60_100ghz": plot_loss,
        "loss_188ghz": plot_loss,
        "loss_350_900ghz": plot_loss,
        "coverage_28_60ghz": plot_coverage,
        "coverage_350_900ghz": plot_coverage,
        "coverage_350_900ghz_snow_extrapolated": plot_coverage,
        "snr_2_60_300ghz": plot_snr,
    }
    for stem, fn in jobs.items():
        path = results / f"{stem}.csv"
        if not path.exists():
            print(f"skipping {path} (not found)")
            continue
        fig, ax = plt.subplots(figsize=(7, 5))
        fn(path, ax)
        ax.grid(True, alpha=0.3)
        ax.legend(fontsize=7)
        fig.savefig(results / f"{stem}.png", dpi=120, bbox_inches="tight")
        plt.close(fig)
    for stem, x, ys, labels in (
        ("gas_1_1000ghz", "freq_ghz", ["beta_oxygen_db_km", "beta_water_db_km", "beta_total_db_km"],
         {"xlabel": "frequency (GHz)", "ylabel": "specific attenuation (dB/km)", "yscale": "log"}),
        ("array_gain", "freq_ghz", ["gain_db"], {"xlabel": "frequency (GHz)", "ylabel": "array gain (dB)"}),
    ):
        path = results / f"{stem}.csv"
        if path.exists():
            fig, ax = plt.subplots(figsize=(7, 5))
            plot_columns(path, ax, x, ys, **labels)
            ax.grid(True, alpha=0.3)
            ax.legend(fontsize=7)
            fig.savefig(results / f"{stem}.png", dpi=120, bbox_inches="tight")
            plt.close(fig)
    print(f"plots written to {results}")


if __name__ == "__main__":
    main(sys.argv)
