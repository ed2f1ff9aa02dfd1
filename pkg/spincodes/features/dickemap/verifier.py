"""
KL checks on the qubit side.

dense      every Pauli string of weight 1..d-1 on full 2^n vectors
symmetric  one representative per Pauli class, evaluated in the Dicke basis;
           valid because the codewords are permutation invariant
"""
from typing import List, Optional
import logging

import numpy as np

from spincodes.core.config import get_settings
from spincodes.core.exceptions import InvalidInputError
from spincodes.core.parallel import map_parallel
from spincodes.features.klengine import ON_DIAG, OFF_DIAG
from spincodes.models.schemas import KLConditionResult, KLReport
from .multiqubit import MultiqubitCode, check_dense_qubits
from .paulis import PauliClass, pauli_apply, pauli_classes, pauli_strings, sym_matrix_element

logger = logging.getLogger(__name__)

DENSE = "dense"
SYMMETRIC = "symmetric"
MODES = (DENSE, SYMMETRIC)


def _conditions(label: str, e00: complex, e01: complex, e10: complex, e11: complex) -> List[KLConditionResult]:
    return [
        KLConditionResult(kind=ON_DIAG, residual=float(abs(e00 - e11)), error=label),
        KLConditionResult(kind=OFF_DIAG, residual=float(max(abs(e01), abs(e10))), error=label),
    ]


def _dense_conditions(code: MultiqubitCode, d: int) -> List[KLConditionResult]:
    check_dense_qubits(code.n, get_settings().dense_max_qubits, "Dense KL check")
    zero, one = code.dense_vectors()
    conditions: List[KLConditionResult] = []
    for weight in range(1, min(d - 1, code.n) + 1):
        for E in pauli_strings(code.n, weight):
            e_zero, e_one = pauli_apply(E, zero), pauli_apply(E, one)
            conditions.extend(_conditions(
                E.letters,
                np.vdot(zero, e_zero),
                np.vdot(zero, e_one),
                np.vdot(one, e_zero),
                np.vdot(one, e_one),
            ))
    return conditions


def class_matrix(code: MultiqubitCode, cls: PauliClass) -> np.ndarray:
    """(n+1) x (n+1) Dicke-basis matrix of Sym(class)."""
    n = code.n
    matrix = np.zeros((n + 1, n + 1), dtype=np.complex128)
    for w_bra in range(n + 1):
        for w_ket in range(n + 1):
            matrix[w_bra, w_ket] = sym_matrix_element(n, w_bra, cls, w_ket)
    return matrix


def _symmetric_conditions(code: MultiqubitCode, d: int, max_workers: Optional[int]) -> List[KLConditionResult]:
    zero, one = code.dicke_vectors()
    support = sorted(set(code.amp0) | set(code.amp1))

    def check_class(cls: PauliClass) -> List[KLConditionResult]:
        # only rows and columns on the codeword support matter
        block = np.array([
            [sym_matrix_element(code.n, w_bra, cls, w_ket) for w_ket in support]
            for w_bra in support
        ], dtype=np.complex128)
        z, o = zero[support], one[support]
        return _conditions(cls.label, z @ block @ z, z @ block @ o, o @ block @ z, o @ block @ o)

    classes = pauli_classes(d - 1, code.n)
    results = map_parallel(check_class, classes, max_workers=max_workers, label="Pauli class")
    return [condition for group in results for condition in group]


def multiqubit_kl_check(
    code: MultiqubitCode,
    d: int,
    mode: str = SYMMETRIC,
    tol: Optional[float] = None,
    max_workers: Optional[int] = None,
) -> KLReport:
    """
    KL conditions against every Pauli error of weight < d.

    Raises:
        InvalidInputError: for an unknown mode or d < 1
        ResourceLimitError: dense mode above settings.dense_max_qubits
    """
    if mode not in MODES:
        raise InvalidInputError(f"Unknown mode {mode!r}; expected one of {MODES}")
    if d < 1:
        raise InvalidInputError(f"Distance must be at least 1, got {d}")
    tol = tol if tol is not None else get_settings().tolerance

    if mode == DENSE:
        conditions = _dense_conditions(code, d)
    else:
        conditions = _symmetric_conditions(code, d, max_workers)

    report = KLReport.from_conditions(mode, d, tol, conditions)
    mark = "✓" if report.passed else "✗"
    logger.info(
        f"{mark} {mode.capitalize()} KL check of {code} at d={d}: "
        f"{len(conditions) // 2} errors, max residual {report.max_residual:.3e}"
    )
    return report
