"""
Knill-Laflamme checks for two-dimensional spin codes.

The full check evaluates every spherical tensor of rank k < d; the reduced
check only the conditions that survive for real covariant codes.
"""
from typing import List, Optional
import logging

import numpy as np

from spincodes.core.config import get_settings
from spincodes.core.exceptions import InvalidInputError, RankOverflowError
from spincodes.features.angular import HalfInt, tensor_components, tensor_matrix
from spincodes.models.schemas import KLConditionResult, KLReport
from .codes import SpinCode
from .conditions import ON_DIAG, OFF_DIAG, reduced_conditions

logger = logging.getLogger(__name__)


def _resolve_tolerance(tol: Optional[float]) -> float:
    if tol is None:
        return get_settings().tolerance
    if tol <= 0:
        raise InvalidInputError(f"Tolerance must be positive, got {tol}")
    return tol


def kl_check_vectors(
    j: HalfInt,
    zero: np.ndarray,
    one: np.ndarray,
    d: int,
    tol: Optional[float] = None,
) -> KLReport:
    """
    Full KL check on an arbitrary (possibly complex) codeword pair.

    For every 0 <= k < d and |q| <= k: <0|T|1> and <1|T|0> must vanish and
    <0|T|0> must equal <1|T|1>.

    Raises:
        InvalidInputError: if d < 1 or the vectors are not spin-j vectors
        RankOverflowError: if d > 2j+1
    """
    j = HalfInt.of(j)
    tol = _resolve_tolerance(tol)
    if d < 1:
        raise InvalidInputError(f"Distance must be at least 1, got {d}")
    if d > j.twice + 1:
        raise RankOverflowError(f"Distance {d} needs ranks up to {d - 1}, beyond 2j={j.twice}")

    zero = np.asarray(zero, dtype=np.complex128)
    one = np.asarray(one, dtype=np.complex128)
    if zero.shape != (j.twice + 1,) or one.shape != (j.twice + 1,):
        raise InvalidInputError(f"Codewords of shapes {zero.shape}, {one.shape} do not live in spin {j}")

    bra0, bra1 = zero.conj(), one.conj()
    conditions: List[KLConditionResult] = []
    for k, q in tensor_components(d - 1):
        tensor = tensor_matrix(j, k, q)
        t_zero, t_one = tensor @ zero, tensor @ one
        off = max(abs(bra0 @ t_one), abs(bra1 @ t_zero))
        on = abs(bra0 @ t_zero - bra1 @ t_one)
        conditions.append(KLConditionResult(kind=ON_DIAG, k=k, q=q, residual=float(on)))
        conditions.append(KLConditionResult(kind=OFF_DIAG, k=k, q=q, residual=float(off)))

    return KLReport.from_conditions("spin", d, tol, conditions)


def kl_check_full(code: SpinCode, d: int, tol: Optional[float] = None) -> KLReport:
    """
    Unreduced ground-truth KL check of a spin code at distance d.

    Args:
        code: Spin code
        d: Distance; every rank k < d is checked
        tol: Pass threshold (default: settings.tolerance)

    Returns:
        KLReport with one on-diagonal and one off-diagonal entry per (k, q)
    """
    zero, one = code.vectors()
    report = kl_check_vectors(code.j, zero, one, d, tol)
    mark = "✓" if report.passed else "✗"
    logger.info(f"{mark} Full KL check of {code.rep} at j={code.j}, d={d}: max residual {report.max_residual:.3e}")
    return report


def kl_check_reduced(code: SpinCode, d: int, tol: Optional[float] = None) -> KLReport:
    """
    Check only the reduced conditions (odd k <= d-2) on a real covariant code.

    Raises:
        InvalidInputError: for even d
        RankOverflowError: if d > 2j+1
    """
    tol = _resolve_tolerance(tol)
    if d > code.j.twice + 1:
        raise RankOverflowError(f"Distance {d} needs ranks up to {d - 1}, beyond 2j={code.j.twice}")

    zero, one = code.vectors()
    conditions: List[KLConditionResult] = []
    for condition in reduced_conditions(code.rep, d):
        tensor = tensor_matrix(code.j, condition.k, condition.q)
        if condition.kind == ON_DIAG:
            value = zero @ tensor @ zero - one @ tensor @ one
        else:
            value = zero @ tensor @ one
        conditions.append(
            KLConditionResult(kind=condition.kind, k=condition.k, q=condition.q, residual=float(abs(value)))
        )
    return KLReport.from_conditions("reduced", d, tol, conditions)


def x_covariance_residual(code: SpinCode, k: int, q: int) -> float:
    """
    Largest violation of <u|T^k_q|v> = (-1)^(q+k) <v+1|T^k_q|u+1> over u, v in {0, 1}.

    Holds exactly for real X-covariant codes; the labels u+1, v+1 are taken mod 2.
    """
    tensor = tensor_matrix(code.j, k, q)
    words = code.vectors()
    sign = -1.0 if (q + k) % 2 else 1.0
    worst = 0.0
    for u in (0, 1):
        for v in (0, 1):
            lhs = words[u] @ tensor @ words[v]
            rhs = words[1 - v] @ tensor @ words[1 - u]
            worst = max(worst, abs(lhs - sign * rhs))
    return float(worst)
