"""Exception hierarchy for tauprec."""
from typing import Any, Optional


class TauprecError(Exception):
    """Base class for every error raised by the toolkit."""


class DomainError(TauprecError, ValueError):
    """A parameter lies outside its admissible domain."""


class ShapeError(TauprecError, ValueError):
    """Sizes or shapes of the operands do not agree."""


class SingularityError(TauprecError):
    """A zero (or numerically zero) eigenvalue or a pole was hit.

    Args:
        message (str): Human readable description.
        index (Optional[int]): Offending eigenvalue or node index.
    """

    def __init__(self, message: str, index: Optional[int] = None):
        super().__init__(message)
        self.index = index


class DefinitenessError(TauprecError):
    """A diagonal expected to be positive is not, or an inner product is negative."""


class PivotError(TauprecError):
    """Zero pivot met during an elimination.

    Args:
        message (str): Human readable description.
        index (Optional[int]): Row of the failing pivot.
    """

    def __init__(self, message: str, index: Optional[int] = None):
        super().__init__(message)
        self.index = index


class ConvergenceError(TauprecError):
    """An iteration failed to converge.

    Args:
        message (str): Human readable description.
        trace (Optional[Any]): Diagnostics gathered before giving up.
    """

    def __init__(self, message: str, trace: Optional[Any] = None):
        super().__init__(message)
        self.trace = trace


class ConvergenceDomainError(ConvergenceError, DomainError):
    """A power series is evaluated outside its disc of convergence."""


class ConfigError(TauprecError):
    """Configuration file or override cannot be interpreted."""
