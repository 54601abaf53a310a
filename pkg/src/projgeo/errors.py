"""Exception types shared across the package."""


class ProjGeoError(Exception):
    """Base class for every error raised by projgeo."""


class NotSquare(ProjGeoError):
    """A square matrix was required."""


class IllConditioned(ProjGeoError):
    """Condition estimate exceeds the configured cap."""


class RankDeficientToZero(ProjGeoError):
    """Every input column is numerically zero."""


class ZeroVector(ProjGeoError):
    """A nonzero vector was required."""


class DimensionMismatch(ProjGeoError):
    """Operands live in different dimensions."""


class FieldMismatch(ProjGeoError):
    """Operands live over different fields, or the wrong field was supplied."""


class ShapeMismatch(ProjGeoError):
    """Array has the wrong shape for the operation."""


class InvalidRange(ProjGeoError):
    """Integer argument outside its allowed range."""


class SamePoint(ProjGeoError):
    """Two distinct points were required."""


class DegenerateProjection(ProjGeoError):
    """No usable stereographic pole was found; indicates a bug."""


class SingularCoefficients(ProjGeoError):
    """Mobius coefficients whose determinant vanishes."""
