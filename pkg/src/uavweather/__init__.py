"""Weather-dependent propagation, A2G path loss and link budgets for UAV links."""
from .errors import (
    DataFileError,
    DegenerateGeometryError,
    DomainError,
    IntegrityError,
    ModelRangeError,
    UavWeatherError,
)
from .quantities import AttenuationRate, DecibelValue, Frequency, Length, slant_distance, wavelength

__version__ = "0.1.0"

__all__ = [
    "AttenuationRate",
    "DataFileError",
    "DecibelValue",
    "DegenerateGeometryError",
    "DomainError",
    "Frequency",
    "IntegrityError",
    "Length",
    "ModelRangeError",
    "UavWeatherError",
    "slant_distance",
    "wavelength",
]
