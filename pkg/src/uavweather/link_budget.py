"""Fixed-aperture antenna arrays, received power, thermal noise and SNR."""
from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.constants import Boltzmann

from .errors import DomainError
from .quantities import SPEED_OF_LIGHT, DecibelValue, Frequency, Length, wavelength

__all__ = [
    "NOISE_TEMPERATURE_K",
    "ELEMENT_GAIN_DB",
    "DEFAULT_BANDWIDTH_HZ",
    "MAX_TRANSMIT_POWER_DBM",
    "RadioSystem",
    "ArrayDesign",
    "default_noise_figure_db",
    "effective_wavelength",
    "array_design",
    "received_power",
    "noise_power",
    "snr",
]

NOISE_TEMPERATURE_K = 298.15
ELEMENT_GAIN_DB = 4.0
DEFAULT_BANDWIDTH_HZ = 100e6
MAX_TRANSMIT_POWER_DBM = 45.0


def default_noise_figure_db(f: Frequency) -> float:
    """Receiver noise figure by band: 1 dB sub-6 GHz, 2 dB mmWave, 6.5 dB above 150 GHz."""
    if f.ghz <= 6:
        return 1.0
    if f.ghz <= 150:
        return 2.0
    return 6.5


@dataclass(frozen=True)
class RadioSystem:
    frequency: Frequency
    transmit_power_dbm: float = 45.0
    rx_front_end_loss_db: float = 1.0
    tx_front_end_loss_db: float = 1.0
    noise_figure_db: float | None = None
    bandwidth_hz: float = DEFAULT_BANDWIDTH_HZ
    aperture: Length = Length(0.10)
    effective_permittivity: float = 1.0
    max_transmit_power_dbm: float = MAX_TRANSMIT_POWER_DBM

    def __post_init__(self):
        if self.transmit_power_dbm > self.max_transmit_power_dbm:
            raise DomainError(
                f"transmit power {self.transmit_power_dbm} dBm exceeds the "
                f"{self.max_transmit_power_dbm} dBm cap"
            )
        if self.rx_front_end_loss_db < 0 or self.tx_front_end_loss_db < 0:
            raise DomainError("front-end losses must be non-negative")
        if self.noise_figure_db is None:
            object.__setattr__(self, "noise_figure_db", default_noise_figure_db(self.frequency))
        if self.noise_figure_db < 0:
            raise DomainError("noise figure must be non-negative")
        if not self.bandwidth_hz > 0:
            raise DomainError(f"bandwidth must be positive, got {self.bandwidth_hz}")
        if not self.aperture.m > 0:
            raise DomainError("aperture side length must be positive")
        if self.effective_permittivity < 1:
            raise DomainError("effective dielectric constant must be >= 1")

    @property
    def transmit_power(self) -> DecibelValue:
        return DecibelValue.dbm(self.transmit_power_dbm)


@dataclass(frozen=True)
class ArrayDesign:
    n_side: int
    element_size: Length
    printed_side_count: float

    @property
    def n_elements(self) -> int:
        return self.n_side**2

    @property
    def gain_db(self) -> float:
        return ELEMENT_GAIN_DB + 10 * math.log10(self.n_elements)


def effective_wavelength(f: Frequency, eps_eff: float = 1.0) -> Length:
    """Guided wavelength c0 / (f sqrt(eps_eff)) on a substrate."""
    if eps_eff < 1:
        raise DomainError(f"effective dielectric constant must be >= 1, got {eps_eff}")
    return Length(SPEED_OF_LIGHT / (f.hz * math.sqrt(eps_eff)))


def array_design(f: Frequency, aperture: Length = Length(0.10), eps_eff: float = 1.0) -> ArrayDesign:
    """Largest square half-wavelength-spaced array fitting a W x W aperture.

    Elements per side is floor(2W / lambda), at least one. The alternative
    count 2W/lambda + lambda_e/lambda - 1 is kept for reference only; it
    coincides with 2W/lambda when eps_eff = 1.
    """
    if not aperture.m > 0:
        raise DomainError("aperture side length must be positive")
    lam = wavelength(f).m
    lam_e = effective_wavelength(f, eps_eff).m
    ratio = 2 * aperture.m / lam
    # guard against 39.999999 from rounding in c0 / f
    n_side = max(1, math.floor(ratio + 1e-9))
    return ArrayDesign(n_side, Length(lam_e / 2), ratio + lam_e / lam - 1)


def received_power(
    sys: RadioSystem, tx_gain_db: float, rx_gain_db: float, path_loss: DecibelValue | float
) -> DecibelValue:
    path_loss = float(path_loss)
    if path_loss < 0:
        raise DomainError("path loss must be non-negative")
    return (
        sys.transmit_power
        - sys.rx_front_end_loss_db
        - sys.tx_front_end_loss_db
        + rx_gain_db
        + tx_gain_db
        - path_loss
    )


def noise_power(sys: RadioSystem, temperature_k: float = NOISE_TEMPERATURE_K) -> DecibelValue:
    """Thermal noise 10 log10(k T B) + NF, in dBm."""
    if not sys.bandwidth_hz > 0:
        raise DomainError("bandwidth must be positive")
    return DecibelValue.dbm(
        10 * math.log10(Boltzmann * temperature_k * sys.bandwidth_hz) + sys.noise_figure_db + 30
    )


def snr(received: DecibelValue, noise: DecibelValue) -> DecibelValue:
    return received - noise
