"""
Two-dimensional spin codes covariant under a symplectic irrep of BD_{2b}.

The logical zero lives on the support lattice s + 2bZ and the logical one is
its mirror: amp1(m) = amp0(-m).
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional
import logging
import math

import numpy as np

from spincodes.core.exceptions import InvalidInputError
from spincodes.features.angular.halfint import HalfInt, index_of
from spincodes.features.bindihedral import Irrep, support_lattice

logger = logging.getLogger(__name__)

NORM_TOLERANCE = 1e-12


@dataclass(frozen=True)
class SpinCode:
    """A delta_a-covariant ((2j, 2)) spin code with real amplitudes."""

    j: HalfInt
    rep: Irrep
    amp0: Dict[HalfInt, float] = field(hash=False)
    exact: Optional[Dict[HalfInt, str]] = field(default=None, hash=False, compare=False)

    def __post_init__(self):
        lattice = set(support_lattice(self.rep, self.j))
        for m in self.amp0:
            if m not in lattice:
                raise InvalidInputError(f"m={m} is not on the support lattice of {self.rep} at j={self.j}")
        norm = math.fsum(value * value for value in self.amp0.values())
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise InvalidInputError(f"Codeword is not normalized (norm^2 = {norm!r})")

    @classmethod
    def from_amplitudes(cls, rep: Irrep, j: HalfInt, amplitudes, exact: Optional[List[str]] = None) -> "SpinCode":
        """
        Pair amplitudes with the support lattice in descending m order.

        Args:
            rep: Irrep
            j: Spin
            amplitudes: One real value per lattice point
            exact: Optional exact renderings, one per lattice point
        """
        j = HalfInt.of(j)
        lattice = support_lattice(rep, j)
        values = [float(value) for value in amplitudes]
        if len(values) != len(lattice):
            raise InvalidInputError(
                f"{len(values)} amplitudes given for a lattice of {len(lattice)} points at j={j}"
            )
        exact_map = dict(zip(lattice, exact)) if exact else None
        return cls(j=j, rep=rep, amp0=dict(zip(lattice, values)), exact=exact_map)

    @classmethod
    def from_vector(cls, rep: Irrep, j: HalfInt, zero: np.ndarray, cutoff: float = 1e-15) -> "SpinCode":
        """Read the logical zero from a dense spin-j vector (m-descending)."""
        j = HalfInt.of(j)
        vector = np.asarray(zero)
        if vector.shape != (j.twice + 1,):
            raise InvalidInputError(f"Vector of shape {vector.shape} does not live in spin {j}")
        if np.iscomplexobj(vector) and np.max(np.abs(vector.imag)) > cutoff:
            raise InvalidInputError("Spin codes are built from real codewords")
        vector = np.real(vector)
        amp0 = {
            m: float(vector[index_of(j, m)])
            for m in support_lattice(rep, j)
            if abs(vector[index_of(j, m)]) > cutoff
        }
        return cls(j=j, rep=rep, amp0=amp0)

    @property
    def n(self) -> int:
        """Qubit count of the bootstrapped code."""
        return self.j.twice

    @property
    def dim(self) -> int:
        return self.j.twice + 1

    @property
    def amp1(self) -> Dict[HalfInt, float]:
        return {-m: value for m, value in self.amp0.items()}

    def vectors(self) -> tuple:
        """Dense (|0>, |1>) in the m-descending basis."""
        zero = np.zeros(self.dim)
        one = np.zeros(self.dim)
        for m, value in self.amp0.items():
            zero[index_of(self.j, m)] = value
            one[index_of(self.j, -m)] = value
        return zero, one

    def __str__(self) -> str:
        support = ", ".join(str(m) for m in self.amp0)
        return f"SpinCode(j={self.j}, {self.rep}, support=[{support}])"
