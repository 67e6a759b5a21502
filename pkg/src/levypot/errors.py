"""Exception types raised across the library.

Every error carries the name of the operation that rejected the input so the
command line tool can report "error in <operation>: ..." without a traceback.
"""


class LevyPotError(Exception):
    """Base class for library errors; ``operation`` names the failing call."""

    def __init__(self, operation: str, message: str):
        self.operation = operation
        super().__init__(f"{operation}: {message}")


class DomainError(LevyPotError, ValueError):
    """Argument outside the mathematical domain of the operation."""


class DimensionError(DomainError):
    """Spatial dimension incompatible with the requested quantity."""


class OverflowRangeError(LevyPotError, OverflowError):
    """Result would exceed double range; a scaled variant may exist."""


class QuadratureError(LevyPotError, RuntimeError):
    """Base class for adaptive integration failures."""


class ConvergenceError(QuadratureError):
    """Subdivision budget exhausted before reaching the error target."""


class IntegrandNaNError(QuadratureError):
    """Integrand evaluated to NaN inside the integration domain."""


class EfficiencyError(LevyPotError, RuntimeError):
    """Rejection sampler guard tripped: expected acceptance rate too low."""
