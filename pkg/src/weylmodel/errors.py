"""Exception hierarchy shared across the package."""


class WeylModelError(Exception):
    """Base class for all errors raised by this package."""


class UnsupportedTypeError(WeylModelError):
    """Root-system series or rank outside the supported classification."""


class DimensionMismatchError(WeylModelError):
    """Vector or weight length does not match the ambient rank."""


class IndexOutOfRangeError(WeylModelError):
    """Simple-root index outside 1..rank."""


class NotDominantError(WeylModelError):
    """Weight has a negative fundamental-weight coordinate."""


class NotDominantIntegralError(NotDominantError):
    """Weight is not a dominant integral weight."""


class ToleranceInvalidError(WeylModelError):
    """Tolerance must be a positive finite number."""


class DegeneratePotentialError(WeylModelError):
    """Exponent forms do not span; strict convexity cannot be certified."""


class ExponentOverflowError(WeylModelError):
    """An exponent exceeded the configured overflow bound."""


class BudgetExceededError(WeylModelError):
    """Iteration budget exhausted without reaching a verdict."""

    def __init__(self, message, iterations=None, residual=None):
        super().__init__(message)
        self.iterations = iterations
        self.residual = residual


class DimensionTooLargeError(WeylModelError):
    """Requested computation exceeds the supported dimension."""


class WeightOutsideCellError(WeylModelError):
    """Weight has a nonzero coordinate on the cell's pinned indices."""
