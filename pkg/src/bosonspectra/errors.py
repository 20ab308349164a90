"""Exception hierarchy shared by all bosonspectra modules."""


class BosonSpectraError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(BosonSpectraError):
    """Matrix or vector shapes are inconsistent (e.g. non-square permanent input)."""


class ConfigurationError(BosonSpectraError):
    """Occupation configurations, mode lists or mixture weights are invalid."""


class RepresentationError(BosonSpectraError):
    """Spectral specifications cannot be reduced to a common basis."""


class CapacityError(BosonSpectraError):
    """Requested computation exceeds a hard size guard; refusing to hang."""
