"""
Spin-j actions of the named single-qubit gates.

    D^j(X)|j,m>     = e^{-i pi j}     |j,-m>
    D^j(Y)|j,m>     = e^{-i pi (j-m)} |j,-m>
    D^j(Z)|j,m>     = e^{-i pi m}     |j,m>
    D^j(Ph(a))|j,m> = e^{-i a m}      |j,m>

The half-integer phase e^{-i pi j} is taken literally (no branch flip).
"""
from dataclasses import dataclass
from typing import Tuple
import cmath
import math

import numpy as np

from spincodes.core.exceptions import InvalidInputError
from .halfint import HalfInt, check_spin, magnetic_numbers

GATE_NAMES = ("X", "Y", "Z", "Ph")

# named diagonal gates from the SU(2) gate table
PHASE_ALIASES = {
    "S": math.pi / 2,
    "T": math.pi / 4,
}


@dataclass(frozen=True)
class GateAction:
    """One of X, Y, Z, Ph(alpha) acting on spin j."""

    name: str
    j: HalfInt
    alpha: float = 0.0

    def __post_init__(self):
        if self.name not in GATE_NAMES:
            raise InvalidInputError(f"Unknown gate {self.name!r}; expected one of {GATE_NAMES}")
        check_spin(self.j)

    @classmethod
    def named(cls, name: str, j: HalfInt, alpha: float = 0.0) -> "GateAction":
        """Accept S and T as Ph(pi/2) and Ph(pi/4)."""
        if name in PHASE_ALIASES:
            return cls("Ph", HalfInt.of(j), PHASE_ALIASES[name])
        return cls(name, HalfInt.of(j), alpha)

    @property
    def is_diagonal(self) -> bool:
        return self.name in ("Z", "Ph")

    @property
    def dim(self) -> int:
        return self.j.twice + 1

    def phases(self) -> np.ndarray:
        """Phase picked up by |j,m>, in m-descending order."""
        j = self.j
        values = []
        for m in magnetic_numbers(j):
            if self.name == "X":
                angle = -math.pi * j.twice / 2
            elif self.name == "Y":
                angle = -math.pi * (j.twice - m.twice) / 2
            elif self.name == "Z":
                angle = -math.pi * m.twice / 2
            else:
                angle = -self.alpha * m.twice / 2
            values.append(cmath.exp(1j * angle))
        return np.array(values, dtype=np.complex128)


def gate_matrix(g: GateAction) -> np.ndarray:
    """Dense unitary: diagonal for Z/Ph, antidiagonal for X/Y."""
    phases = g.phases()
    if g.is_diagonal:
        return np.diag(phases)
    matrix = np.zeros((g.dim, g.dim), dtype=np.complex128)
    for index, phase in enumerate(phases):
        # |m> -> |-m>: column index i maps to row dim-1-i
        matrix[g.dim - 1 - index, index] = phase
    return matrix


def gate_apply(g: GateAction, v: np.ndarray) -> np.ndarray:
    """
    Apply D^j(g) to a spin-j vector without building the matrix.

    Raises:
        InvalidInputError: if len(v) != 2j+1
    """
    v = np.asarray(v)
    if v.shape != (g.dim,):
        raise InvalidInputError(f"Vector of shape {v.shape} does not live in spin {g.j} (dim {g.dim})")
    scaled = g.phases() * v
    if g.is_diagonal:
        return scaled
    return scaled[::-1]


def conjugation_rule(g: GateAction, k: int, q: int) -> Tuple[complex, int]:
    """
    D^j(g)^dagger T^k_q D^j(g) = phase * T^k_{q'}; returns (phase, q').

    Z flips the sign of odd q, Ph(a) multiplies by e^{i a q}, X maps q to -q
    with (-1)^k, Y maps q to -q with (-1)^{k+q}.
    """
    if g.name == "Z":
        return complex((-1) ** (q % 2)), q
    if g.name == "Ph":
        return cmath.exp(1j * g.alpha * q), q
    if g.name == "X":
        return complex((-1) ** (k % 2)), -q
    return complex((-1) ** ((k + q) % 2)), -q
