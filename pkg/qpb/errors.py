"""Exception hierarchy for qpb.

Every error raised by the library derives from QPBError, which is itself a
ValueError so callers that only know about bad input still catch it.
"""

from typing import Optional


class QPBError(ValueError):
    """Base class for all qpb errors."""


class ParseError(QPBError):
    """A scalar, form or potential string could not be parsed."""


class ConfigError(QPBError):
    """Invalid settings or run configuration."""


class ExactDivisionError(QPBError, ZeroDivisionError):
    """Division by an exact zero."""


class NotSnappableError(QPBError):
    """No rational reconstruction within tolerance."""


class DegreeMismatchError(QPBError):
    """Operands have incompatible form degrees."""


class UnsupportedCorepError(QPBError):
    """Corepresentation outside the catalog, or not supported by an operation."""


class NotHorizontalError(QPBError):
    """A form expected in Omega(M) x G carries group-form legs."""


class NotAConnectionError(QPBError):
    """A transformed connection form is not of the shape mu x 1 + 1 x sigma."""


class NotConvolutionInvertibleError(QPBError):
    """Gauge map has no convolution inverse."""


class ConvergenceError(QPBError):
    """Iterative solver failed to converge."""

    def __init__(self, message: str, trace: Optional[list[dict]] = None):
        super().__init__(message)
        self.trace = trace or []


class SingularSystemError(QPBError):
    """Exact linear system without a unique solution."""


class NotAGaugeMapError(QPBError):
    """Map fails a gauge-map invariant: unit, grading or Ad-covariance."""
