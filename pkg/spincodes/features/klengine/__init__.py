"""Knill-Laflamme evaluation and condition counting for covariant spin codes."""
from .codes import SpinCode
from .conditions import (
    ON_DIAG,
    OFF_DIAG,
    ReducedCondition,
    reduced_conditions,
    count_conditions,
    count_on_diag_closed,
    count_off_diag_closed,
    correction_constant,
    count_conditions_closed,
)
from .kl_service import kl_check_vectors, kl_check_full, kl_check_reduced, x_covariance_residual

__all__ = [
    "SpinCode",
    "ON_DIAG",
    "OFF_DIAG",
    "ReducedCondition",
    "reduced_conditions",
    "count_conditions",
    "count_on_diag_closed",
    "count_off_diag_closed",
    "correction_constant",
    "count_conditions_closed",
    "kl_check_vectors",
    "kl_check_full",
    "kl_check_reduced",
    "x_covariance_residual",
]
