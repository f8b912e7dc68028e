"""Exception types raised across the package."""


class SkewSpecError(Exception):
    """Base class for every error raised by skewspec."""


class InputError(SkewSpecError, ValueError):
    """Malformed or mismatched input (dimensions, sizes, parse failures)."""


class UnsupportedError(SkewSpecError):
    """Input is valid but outside the supported range (e.g. n too large)."""


class SingularMatrixError(SkewSpecError, ArithmeticError):
    """Raised when an operation needs a nonsingular matrix."""

    def __init__(self, message, det=0):
        super().__init__(message)
        self.det = det


class NotControllableError(SkewSpecError):
    """The walk matrix of a graph is singular."""


class NotCospectralMateError(SkewSpecError):
    """No regular rational orthogonal conjugator links the two graphs."""


class InapplicableError(SkewSpecError):
    """A result was requested for a graph outside its hypotheses."""
