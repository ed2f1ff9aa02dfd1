"""
Error types shared by every feature.

Each error carries the process exit code the CLI reports for it.
"""
from typing import Optional, Dict, Any


class SpinCodesError(Exception):
    """Base error for the package."""

    exit_code: int = 1

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}


class InvalidInputError(SpinCodesError, ValueError):
    """Malformed arguments: half-integers, irreps, distances."""

    exit_code = 2


class OutOfRangeError(InvalidInputError):
    """Tensor rank or component outside 0 <= k <= 2j, |q| <= k."""


class RankOverflowError(InvalidInputError):
    """Requested distance needs ranks beyond 2j."""


class UnsupportedSpinError(InvalidInputError):
    """Symplectic irreps only occur at half-integral spin."""


class NotMiddleIrrepError(InvalidInputError):
    """The d=3 family needs 1 < a < b."""


class InsufficientSpinError(InvalidInputError):
    """Spin too small for the requested construction."""


class NoDegreesOfFreedomError(InvalidInputError):
    """Empty support lattice: nothing to search over."""


class NumericalInconsistencyError(SpinCodesError, ArithmeticError):
    """A result that should hold exactly failed an independent check."""

    exit_code = 1


class SearchExhaustedError(SpinCodesError):
    """All restarts finished above tolerance."""

    exit_code = 3

    def __init__(self, message: str, best_residual: float, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, details)
        self.best_residual = best_residual


class VerificationFailedError(SpinCodesError):
    """A KL check did not pass."""

    exit_code = 4


class NotTransversalError(VerificationFailedError):
    """A physical gate leaks out of the codespace."""


class ResourceLimitError(SpinCodesError, MemoryError):
    """Dense construction beyond the configured qubit guard."""

    exit_code = 5
