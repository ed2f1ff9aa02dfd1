"""
Transversal gates: the Dicke map as an intertwiner, and the logical action
of g^{⊗n} on a bootstrapped code.
"""
from typing import Iterable, List, Optional, Tuple
import logging
import math

import numpy as np

from spincodes.core.config import get_settings
from spincodes.core.exceptions import InvalidInputError, NotTransversalError
from spincodes.features.angular import GateAction, HalfInt, gate_matrix
from spincodes.features.bindihedral import GroupElement, generators, group_elements, irrep_matrix
from spincodes.models.schemas import GateCertificate, LogicalGateReport, RepInfo
from spincodes.utils.helpers import complex_pair
from .multiqubit import MultiqubitCode, check_dense_qubits, dicke_dense

logger = logging.getLogger(__name__)

HALF = HalfInt(1)


def tensor_power_apply(single: np.ndarray, state: np.ndarray, n: int) -> np.ndarray:
    """U^{⊗n} applied to a 2^n vector; axis 0 is qubit 0."""
    psi = np.asarray(state, dtype=np.complex128).reshape((2,) * n)
    for axis in range(n):
        psi = np.moveaxis(np.tensordot(single, psi, axes=([1], [axis])), 0, axis)
    return psi.reshape(2 ** n)


def intertwiner_check(n: int, gate: GateAction, tol: Optional[float] = None) -> float:
    """
    max_m || D[D^j(g)|j,m>] - g^{⊗n} D|j,m> || with j = n/2, computed densely.

    Raises:
        ResourceLimitError: above settings.operator_max_qubits
    """
    if n < 1:
        raise InvalidInputError(f"Qubit count must be positive, got {n}")
    check_dense_qubits(n, get_settings().operator_max_qubits, "Intertwiner check")
    tol = tol if tol is not None else get_settings().tolerance

    spin = gate_matrix(GateAction(gate.name, HalfInt(n), gate.alpha))
    single = gate_matrix(GateAction(gate.name, HALF, gate.alpha))
    dicke = np.stack([dicke_dense(n, w) for w in range(n + 1)], axis=1)

    deviation = 0.0
    for w in range(n + 1):
        # column w of the spin matrix is D^j(g)|j, j-w> in the Dicke basis
        expected = dicke @ spin[:, w]
        actual = tensor_power_apply(single, dicke[:, w], n)
        deviation = max(deviation, float(np.linalg.norm(expected - actual)))

    mark = "✓" if deviation < tol else "✗"
    logger.debug(f"{mark} Intertwiner {gate.name} on {n} qubits: deviation {deviation:.3e}")
    return deviation


def spin_gate_matrix(g: GroupElement, j: HalfInt) -> np.ndarray:
    """D^j(X^x P^p) = D^j(X)^x D^j(Ph(pi/b))^p."""
    matrix = gate_matrix(GateAction("Ph", j, math.pi * g.p / g.b))
    if g.x:
        matrix = gate_matrix(GateAction("X", j)) @ matrix
    return matrix


def _phase_aligned_deviation(actual: np.ndarray, reference: np.ndarray) -> float:
    """max |actual - phase * reference| with the phase read off the largest entry of actual."""
    index = np.unravel_index(np.argmax(np.abs(actual)), actual.shape)
    if abs(reference[index]) < 1e-12:
        return float(np.max(np.abs(actual)) + np.max(np.abs(reference)))
    phase = actual[index] / reference[index]
    phase /= abs(phase)
    return float(np.max(np.abs(actual - phase * reference)))


def _logical(code: MultiqubitCode, g: GroupElement) -> Tuple[np.ndarray, float]:
    """(2x2 logical matrix, leakage out of the codespace)."""
    zero, one = code.dicke_vectors()
    basis = np.stack([zero, one], axis=1).astype(np.complex128)
    moved = spin_gate_matrix(g, code.j) @ basis
    logical = basis.conj().T @ moved
    leakage = float(np.max(np.linalg.norm(moved - basis @ logical, axis=0)))
    return logical, leakage


def _require_provenance(code: MultiqubitCode, g: Optional[GroupElement] = None) -> None:
    if code.rep is None:
        raise InvalidInputError(f"{code} has no spin provenance; its transversal group is unknown")
    if g is not None and g.b != code.rep.b:
        raise InvalidInputError(f"{g.label()} is not an element of BD_{2 * code.rep.b}")


def transversal_action(code: MultiqubitCode, g: GroupElement, tol: Optional[float] = None) -> LogicalGateReport:
    """
    Logical action of g^{⊗n}, certified against delta_a(g) up to a global phase.

    Raises:
        InvalidInputError: code without provenance, or g from another group
        NotTransversalError: if g^{⊗n} leaks out of the codespace
    """
    _require_provenance(code, g)
    tol = tol if tol is not None else get_settings().tolerance

    logical, leakage = _logical(code, g)
    if leakage > tol:
        raise NotTransversalError(
            f"{g.label()} moves {code} out of its codespace (leakage {leakage:.3e})",
            details={"element": g.label(), "leakage": leakage},
        )

    deviation = _phase_aligned_deviation(logical, irrep_matrix(code.rep, g))
    certified = deviation < tol
    mark = "✓" if certified else "✗"
    logger.info(f"{mark} {g.label()} on {code}: irrep deviation {deviation:.3e}, leakage {leakage:.3e}")
    return LogicalGateReport(
        element=g.label(),
        logical=[[complex_pair(value) for value in row] for row in logical],
        irrep_deviation=deviation,
        leakage=leakage,
        certified=certified,
    )


def closure_deviation(code: MultiqubitCode, elements: Iterable[GroupElement]) -> float:
    """max over pairs of the mismatch between L(g h) and L(g) L(h), up to phase."""
    elements = list(elements)
    logicals = {g: _logical(code, g)[0] for g in elements}
    deviation = 0.0
    for g in elements:
        for h in elements:
            product = logicals.get(g * h)
            if product is None:
                product = _logical(code, g * h)[0]
            deviation = max(deviation, _phase_aligned_deviation(product, logicals[g] @ logicals[h]))
    return deviation


def certify_group(code: MultiqubitCode, all_elements: bool = False, tol: Optional[float] = None) -> GateCertificate:
    """
    Certify the generators X, Z, Ph(pi/b) (or every element of BD_{2b}) and group closure.

    Raises:
        InvalidInputError: code without provenance
        NotTransversalError: if any checked element leaks
    """
    _require_provenance(code)
    tol = tol if tol is not None else get_settings().tolerance
    b = code.rep.b
    elements: List[GroupElement] = group_elements(b) if all_elements else generators(b)

    reports = [transversal_action(code, g, tol) for g in elements]
    closure = closure_deviation(code, elements)
    certified = all(report.certified for report in reports) and closure < tol

    mark = "✓" if certified else "✗"
    logger.info(
        f"{mark} Transversal group of {code}: {len(elements)} elements, closure deviation {closure:.3e}"
    )
    return GateCertificate(
        n=code.n,
        rep=RepInfo(b=b, a=code.rep.a),
        gates=reports,
        group_order_checked=len(elements),
        closure_deviation=closure,
        certified=certified,
    )
