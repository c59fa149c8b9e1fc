"""Exception hierarchy shared by every model module."""


class UavWeatherError(Exception):
    """Base class for errors raised by this package."""


class DomainError(UavWeatherError, ValueError):
    """An input lies outside the mathematical domain of a model."""


class ModelRangeError(DomainError):
    """An input lies outside the validity window of an empirical fit."""


class DegenerateGeometryError(DomainError):
    """The UAV and the ground user coincide."""


class DataFileError(UavWeatherError):
    """A coefficient data file is missing, malformed or violates an invariant."""


class IntegrityError(DataFileError):
    """A data file's content does not match its recorded checksum."""
