"""Loaders for the coefficient tables shipped under ``uavweather/data``.

Each data file is plain CSV preceded by ``# key: value`` comment lines. Every
file must declare ``source``, ``revision`` and ``sha256``; the checksum covers
the non-comment lines (header row included) joined with ``\\n`` and is
re-verified on every load.

Rain fit file (``rain_p838.csv``)::

    family,j,a_j,b_j,c_j,m,c
    kH,1,-5.33980,-0.10008,1.13098,,      <- Gaussian term j
    kH,,,,,-0.18961,0.71147               <- linear term (m, c)

Line table (``gas_lines_p676.csv``)::

    gas,f0_GHz,a1,a2,a3,a4,a5,a6
    oxygen,50.474214,0.975,9.651,6.69,0,2.566,6.85
    water_vapour,22.23508,0.1079,2.144,26.38,0.76,5.087,1

For water-vapour rows the six coefficient columns hold b1..b6.
"""
from __future__ import annotations

import csv
import hashlib
import io
from dataclasses import dataclass
from functools import cached_property, lru_cache
from importlib import resources
from pathlib import Path
from typing import NamedTuple

import numpy as np

from .errors import DataFileError, IntegrityError

__all__ = [
    "RAIN_FAMILIES",
    "RainFitFamily",
    "RainFitTable",
    "SpectralLine",
    "SpectroscopicLineTable",
    "DataFile",
    "read_data_file",
    "body_checksum",
    "load_rain_fit_table",
    "load_line_table",
    "default_rain_table",
    "default_line_table",
    "shipped_data_path",
    "shipped_checksums",
]

RAIN_FAMILIES = {"kH": 4, "kV": 4, "alphaH": 5, "alphaV": 5}
GASES = ("oxygen", "water_vapour")

RAIN_FILE = "rain_p838.csv"
LINE_FILE = "gas_lines_p676.csv"
REQUIRED_META = ("source", "revision", "sha256")


class DataFile(NamedTuple):
    path: str
    meta: dict
    rows: list  # list[dict[str, str]], header-keyed
    checksum: str


def body_checksum(body_lines: list[str]) -> str:
    text = "\n".join(line.rstrip() for line in body_lines) + "\n"
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def read_data_file(source: str | Path) -> DataFile:
    """Split a data file into metadata and CSV rows, verifying its checksum."""
    path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DataFileError(f"cannot read data file {path}: {exc}") from exc

    meta: dict[str, str] = {}
    body: list[str] = []
    for line in text.splitlines():
        if line.startswith("#"):
            key, sep, value = line[1:].partition(":")
            if sep:
                meta[key.strip()] = value.strip()
        elif line.strip():
            body.append(line)
    if not body:
        raise DataFileError(f"{path}: file contains no data")
    missing = [k for k in REQUIRED_META if k not in meta]
    if missing:
        raise DataFileError(f"{path}: missing header field(s) {', '.join(missing)}")

    checksum = body_checksum(body)
    if checksum != meta["sha256"]:
        raise IntegrityError(
            f"{path}: checksum mismatch (recorded {meta['sha256']}, computed {checksum})"
        )
    rows = list(csv.DictReader(io.StringIO("\n".join(body))))
    if not rows:
        raise DataFileError(f"{path}: header present but no data rows")
    return DataFile(str(path), meta, rows, checksum)


def _number(row: dict, key: str, path: str, lineno: int) -> float:
    raw = row.get(key)
    try:
        value = float(raw)
    except (TypeError, ValueError):
        raise DataFileError(f"{path}: row {lineno}: column {key!r} is not a number ({raw!r})") from None
    if not np.isfinite(value):
        raise DataFileError(f"{path}: row {lineno}: column {key!r} is not finite")
    return value


@dataclass(frozen=True)
class RainFitFamily:
    """Gaussian terms ``(a_j, b_j, c_j)`` plus the linear pair ``(m, c)`` in log10 f."""

    terms: tuple[tuple[float, float, float], ...]
    m: float
    c: float

    def evaluate(self, log_f: float) -> float:
        total = self.m * log_f + self.c
        for a, b, c in self.terms:
            total += a * np.exp(-(((log_f - b) / c) ** 2))
        return float(total)


@dataclass(frozen=True)
class RainFitTable:
    kH: RainFitFamily
    kV: RainFitFamily
    alphaH: RainFitFamily
    alphaV: RainFitFamily
    revision: str = ""
    checksum: str = ""

    def family(self, name: str) -> RainFitFamily:
        if name not in RAIN_FAMILIES:
            raise KeyError(f"unknown rain coefficient family {name!r}")
        return getattr(self, name)


def load_rain_fit_table(source: str | Path) -> RainFitTable:
    data = read_data_file(source)
    path = data.path
    terms: dict[str, list] = {name: [] for name in RAIN_FAMILIES}
    linear: dict[str, tuple[float, float]] = {}

    # header is line 1 of the body, so data rows start at 2
    for lineno, row in enumerate(data.rows, start=2):
        name = (row.get("family") or "").strip()
        if name not in RAIN_FAMILIES:
            raise DataFileError(f"{path}: row {lineno}: unknown family {name!r}")
        j = (row.get("j") or "").strip()
        if j:
            a = _number(row, "a_j", path, lineno)
            b = _number(row, "b_j", path, lineno)
            c = _number(row, "c_j", path, lineno)
            if c == 0:
                raise DataFileError(f"{path}: row {lineno}: c_j must be non-zero ({name} term {j})")
            terms[name].append((int(j), (a, b, c)))
        else:
            if name in linear:
                raise DataFileError(f"{path}: row {lineno}: duplicate linear term for {name}")
            linear[name] = (_number(row, "m", path, lineno), _number(row, "c", path, lineno))

    families = {}
    for name, expected in RAIN_FAMILIES.items():
        found = sorted(terms[name])
        if len(found) != expected:
            raise DataFileError(
                f"{path}: family {name} has {len(found)} Gaussian terms, expected {expected}"
            )
        if [j for j, _ in found] != list(range(1, expected + 1)):
            raise DataFileError(f"{path}: family {name} term indices must be 1..{expected}")
        if name not in linear:
            raise DataFileError(f"{path}: family {name} has no linear (m, c) row")
        m, c = linear[name]
        families[name] = RainFitFamily(tuple(t for _, t in found), m, c)
    return RainFitTable(**families, revision=data.meta["revision"], checksum=data.checksum)


class SpectralLine(NamedTuple):
    f0_ghz: float
    c1: float
    c2: float
    c3: float
    c4: float
    c5: float
    c6: float


@dataclass(frozen=True)
class SpectroscopicLineTable:
    """Oxygen and water-vapour resonance lines, each sorted by centre frequency."""

    oxygen: tuple[SpectralLine, ...]
    water_vapour: tuple[SpectralLine, ...]
    revision: str = ""
    checksum: str = ""

    def lines(self, gas: str) -> tuple[SpectralLine, ...]:
        if gas not in GASES:
            raise KeyError(f"unknown gas {gas!r}")
        return getattr(self, gas)

    @cached_property
    def _arrays(self) -> dict[str, np.ndarray]:
        return {gas: np.array(self.lines(gas), dtype=float).T for gas in GASES}

    def columns(self, gas: str) -> np.ndarray:
        """Array of shape (7, n_lines): f0 followed by the six coefficients."""
        return self._arrays[gas]


def load_line_table(source: str | Path) -> SpectroscopicLineTable:
    data = read_data_file(source)
    path = data.path
    by_gas: dict[str, list[SpectralLine]] = {gas: [] for gas in GASES}
    for lineno, row in enumerate(data.rows, start=2):
        gas = (row.get("gas") or "").strip()
        if gas not in by_gas:
            raise DataFileError(f"{path}: row {lineno}: unknown gas {gas!r}")
        f0 = _number(row, "f0_GHz", path, lineno)
        if f0 <= 0:
            raise DataFileError(f"{path}: row {lineno}: line centre must be positive")
        coeffs = [_number(row, f"a{i}", path, lineno) for i in range(1, 7)]
        by_gas[gas].append(SpectralLine(f0, *coeffs))

    for gas, lines in by_gas.items():
        if not lines:
            raise DataFileError(f"{path}: no {gas} lines")
        centres = [line.f0_ghz for line in lines]
        for lo, hi in zip(centres, centres[1:]):
            if not hi > lo:
                raise DataFileError(
                    f"{path}: {gas} lines not strictly ascending ({lo} GHz followed by {hi} GHz)"
                )
    return SpectroscopicLineTable(
        tuple(by_gas["oxygen"]),
        tuple(by_gas["water_vapour"]),
        revision=data.meta["revision"],
        checksum=data.checksum,
    )


def shipped_data_path(name: str) -> Path:
    return Path(str(resources.files("uavweather") / "data" / name))


@lru_cache(maxsize=None)
def default_rain_table() -> RainFitTable:
    return load_rain_fit_table(shipped_data_path(RAIN_FILE))


@lru_cache(maxsize=None)
def default_line_table() -> SpectroscopicLineTable:
    return load_line_table(shipped_data_path(LINE_FILE))


def shipped_checksums() -> dict[str, str]:
    """File name -> verified body checksum for every shipped data file."""
    names = (RAIN_FILE, LINE_FILE, "a2g_environments.json")
    out = {}
    for name in names:
        path = shipped_data_path(name)
        if name.endswith(".json"):
            out[name] = hashlib.sha256(path.read_bytes()).hexdigest()
        else:
            out[name] = read_data_file(path).checksum
    return out
