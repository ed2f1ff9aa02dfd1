"""
Reduced KL conditions as real quadratic forms in the free amplitudes.

With x the amplitudes of |0> on the support lattice and |1> its mirror,

    on-diag   <0|T|0> - <1|T|1> = x^T A x,  A_il = T[m_i, m_l] - T[-m_i, -m_l]
    off-diag  <0|T|1>           = x^T A x,  A_il = T[m_i, -m_l]

and each condition is stored as the symmetric part B = (A + A^T) / 2.
"""
from dataclasses import dataclass, field
from typing import List, Optional, Tuple
import logging

import numpy as np

from spincodes.core.exceptions import InvalidInputError, NoDegreesOfFreedomError, RankOverflowError
from spincodes.features.angular import HalfInt, index_of, tensor_matrix
from spincodes.features.bindihedral import Irrep, support_lattice
from spincodes.features.klengine import ON_DIAG, ReducedCondition, reduced_conditions

logger = logging.getLogger(__name__)

SYMMETRY_TOLERANCE = 1e-12
DEFINITE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class QuadraticSystem:
    """nu real symmetric forms in mu = dim variables."""

    dim: int
    forms: Tuple[np.ndarray, ...] = field(repr=False)
    lattice: Tuple[HalfInt, ...] = ()
    conditions: Tuple[ReducedCondition, ...] = ()
    rep: Optional[Irrep] = None
    j: Optional[HalfInt] = None
    d: Optional[int] = None

    def __post_init__(self):
        if self.dim < 1:
            raise NoDegreesOfFreedomError("A quadratic system needs at least one variable")
        for index, form in enumerate(self.forms):
            if form.shape != (self.dim, self.dim):
                raise InvalidInputError(f"Form {index} has shape {form.shape}, expected {(self.dim, self.dim)}")
            if np.max(np.abs(form - form.T), initial=0.0) > SYMMETRY_TOLERANCE:
                raise InvalidInputError(f"Form {index} is not symmetric")
        if self.lattice and len(self.lattice) != self.dim:
            raise InvalidInputError(f"Lattice of {len(self.lattice)} points for {self.dim} variables")

    @property
    def mu(self) -> int:
        return self.dim

    @property
    def nu(self) -> int:
        return len(self.forms)

    def stacked(self) -> np.ndarray:
        """Forms as one (nu, mu, mu) array."""
        if not self.forms:
            return np.zeros((0, self.dim, self.dim))
        return np.stack(self.forms)

    def residuals(self, x: np.ndarray) -> np.ndarray:
        """r_i(x) = x^T B_i x."""
        return np.einsum("i,kij,j->k", x, self.stacked(), x)

    def objective(self, x: np.ndarray) -> float:
        """sum_i r_i(x)^2."""
        r = self.residuals(x)
        return float(r @ r)

    def jacobian(self, x: np.ndarray) -> np.ndarray:
        """Rows 2 B_i x."""
        return 2.0 * np.einsum("kij,j->ki", self.stacked(), x)

    def tangent_jacobian(self, x: np.ndarray) -> np.ndarray:
        """Jacobian restricted to the tangent space of the unit sphere at x."""
        jacobian = self.jacobian(x)
        return jacobian - np.outer(jacobian @ x, x)


def build_system(rep: Irrep, j: HalfInt, d: int) -> QuadraticSystem:
    """
    One symmetric form per reduced condition of (rep, d) at spin j.

    Raises:
        UnsupportedSpinError: for integral j
        NoDegreesOfFreedomError: if the support lattice is empty
        RankOverflowError: if d > 2j+1
    """
    j = HalfInt.of(j)
    lattice = support_lattice(rep, j)
    if not lattice:
        raise NoDegreesOfFreedomError(f"{rep} does not occur in spin {j}")
    if d > j.twice + 1:
        raise RankOverflowError(f"Distance {d} needs ranks up to {d - 1}, beyond 2j={j.twice}")

    rows = np.array([index_of(j, m) for m in lattice])
    mirrored = np.array([index_of(j, -m) for m in lattice])

    conditions = reduced_conditions(rep, d)
    forms: List[np.ndarray] = []
    for condition in conditions:
        tensor = tensor_matrix(j, condition.k, condition.q)
        if condition.kind == ON_DIAG:
            matrix = tensor[np.ix_(rows, rows)] - tensor[np.ix_(mirrored, mirrored)]
        else:
            matrix = tensor[np.ix_(rows, mirrored)]
        forms.append((matrix + matrix.T) / 2.0)

    system = QuadraticSystem(
        dim=len(lattice),
        forms=tuple(forms),
        lattice=tuple(lattice),
        conditions=tuple(conditions),
        rep=rep,
        j=j,
        d=d,
    )
    logger.debug(f"System for {rep} at j={j}, d={d}: nu={system.nu}, mu={system.mu}")
    return system


def definite_forms(system: QuadraticSystem) -> List[int]:
    """Indices of forms that are positive or negative definite; any one of them rules out a real solution."""
    indices = []
    for index, form in enumerate(system.forms):
        eigenvalues = np.linalg.eigvalsh(form)
        scale = max(float(np.max(np.abs(eigenvalues))), 1.0)
        if np.all(eigenvalues > DEFINITE_TOLERANCE * scale) or np.all(eigenvalues < -DEFINITE_TOLERANCE * scale):
            indices.append(index)
    return indices
