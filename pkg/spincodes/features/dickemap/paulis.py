"""
Pauli strings, their symmetrizations and Dicke-basis matrix elements.

A Pauli string acts on a basis state x as E|x> = phase(x) |x ^ flip>, with
flip the X/Y positions and phase(x) = i^{n_Y} (-1)^{popcount(x & (Y|Z positions))}.
Qubit 0 is the most significant bit.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, Iterator, List, Tuple
import logging
import math

import numpy as np
from scipy.special import comb

from spincodes.core.config import get_settings
from spincodes.core.exceptions import InvalidInputError
from .multiqubit import check_dense_qubits, popcounts

logger = logging.getLogger(__name__)

LETTERS = "IXYZ"
CLASS_TOLERANCE = 1e-12


@dataclass(frozen=True)
class PauliString:
    """A length-n word over I, X, Y, Z."""

    letters: str

    def __post_init__(self):
        if not self.letters:
            raise InvalidInputError("A Pauli string needs at least one qubit")
        bad = set(self.letters) - set(LETTERS)
        if bad:
            raise InvalidInputError(f"Pauli string {self.letters!r} contains {sorted(bad)}")

    @property
    def n(self) -> int:
        return len(self.letters)

    @property
    def weight(self) -> int:
        return sum(1 for letter in self.letters if letter != "I")

    def pauli_class(self) -> "PauliClass":
        return PauliClass(self.letters.count("X"), self.letters.count("Y"), self.letters.count("Z"))

    def masks(self) -> Tuple[int, int, int]:
        """(flip mask, sign mask, number of Y letters)."""
        flip = sign = 0
        for position, letter in enumerate(self.letters):
            bit = 1 << (self.n - 1 - position)
            if letter in "XY":
                flip |= bit
            if letter in "YZ":
                sign |= bit
        return flip, sign, self.letters.count("Y")

    def weight_one_factors(self) -> List["PauliString"]:
        """E = E_1 ... E_w with each E_i of weight one."""
        return [
            PauliString("I" * position + letter + "I" * (self.n - position - 1))
            for position, letter in enumerate(self.letters)
            if letter != "I"
        ]

    def __str__(self) -> str:
        return self.letters


@dataclass(frozen=True)
class PauliClass:
    """Permutation orbit of the Pauli strings with n_X X's, n_Y Y's and n_Z Z's."""

    n_x: int
    n_y: int
    n_z: int

    def __post_init__(self):
        if min(self.n_x, self.n_y, self.n_z) < 0:
            raise InvalidInputError(f"Letter counts must be non-negative, got {self}")

    @property
    def weight(self) -> int:
        return self.n_x + self.n_y + self.n_z

    def representative(self, n: int) -> PauliString:
        if self.weight > n:
            raise InvalidInputError(f"Class {self.label} does not fit on {n} qubits")
        return PauliString("X" * self.n_x + "Y" * self.n_y + "Z" * self.n_z + "I" * (n - self.weight))

    def orbit(self, n: int) -> Iterator[PauliString]:
        """Every distinct arrangement on n qubits."""
        if self.weight > n:
            raise InvalidInputError(f"Class {self.label} does not fit on {n} qubits")
        positions = range(n)
        for xs in combinations(positions, self.n_x):
            rest = [p for p in positions if p not in xs]
            for ys in combinations(rest, self.n_y):
                remaining = [p for p in rest if p not in ys]
                for zs in combinations(remaining, self.n_z):
                    letters = ["I"] * n
                    for p in xs:
                        letters[p] = "X"
                    for p in ys:
                        letters[p] = "Y"
                    for p in zs:
                        letters[p] = "Z"
                    yield PauliString("".join(letters))

    def orbit_size(self, n: int) -> int:
        return math.factorial(n) // (
            math.factorial(self.n_x) * math.factorial(self.n_y) * math.factorial(self.n_z)
            * math.factorial(n - self.weight)
        )

    @property
    def label(self) -> str:
        return f"X{self.n_x}Y{self.n_y}Z{self.n_z}"

    def __str__(self) -> str:
        return self.label


def pauli_classes(max_weight: int, n: int, include_identity: bool = False) -> List[PauliClass]:
    """All classes with weight <= max_weight that fit on n qubits, by weight."""
    classes = []
    for weight in range(0 if include_identity else 1, min(max_weight, n) + 1):
        for n_x in range(weight, -1, -1):
            for n_y in range(weight - n_x, -1, -1):
                classes.append(PauliClass(n_x, n_y, weight - n_x - n_y))
    return classes


def pauli_strings(n: int, weight: int) -> Iterator[PauliString]:
    """Every Pauli string of exactly this weight on n qubits."""
    for positions in combinations(range(n), weight):
        for letters in product("XYZ", repeat=weight):
            word = ["I"] * n
            for position, letter in zip(positions, letters):
                word[position] = letter
            yield PauliString("".join(word))


@lru_cache(maxsize=128)
def _action(letters: str) -> Tuple[np.ndarray, np.ndarray]:
    """(target index, phase) for every basis state, read-only."""
    E = PauliString(letters)
    flip, sign, n_y = E.masks()
    indices = np.arange(2 ** E.n, dtype=np.int64)
    parity = popcounts(E.n)[indices & sign] % 2
    phases = (1j ** n_y) * np.where(parity == 1, -1.0, 1.0)
    targets = indices ^ flip
    targets.flags.writeable = False
    phases.flags.writeable = False
    return targets, phases


def pauli_apply(E: PauliString, v: np.ndarray) -> np.ndarray:
    """E v for a 2^n state vector."""
    v = np.asarray(v)
    if v.shape != (2 ** E.n,):
        raise InvalidInputError(f"Vector of shape {v.shape} is not an {E.n}-qubit state")
    targets, phases = _action(E.letters)
    out = np.zeros(2 ** E.n, dtype=np.complex128)
    out[targets] = phases * v
    return out


def pauli_dense(E: PauliString) -> np.ndarray:
    """
    Dense 2^n x 2^n matrix of E.

    Raises:
        ResourceLimitError: above settings.operator_max_qubits
    """
    check_dense_qubits(E.n, get_settings().operator_max_qubits, "Dense Pauli operator")
    targets, phases = _action(E.letters)
    matrix = np.zeros((2 ** E.n, 2 ** E.n), dtype=np.complex128)
    matrix[targets, np.arange(2 ** E.n)] = phases
    return matrix


def sym_class_dense(cls: PauliClass, n: int) -> np.ndarray:
    """Sym of any string in the class: the uniform average over its orbit."""
    check_dense_qubits(n, get_settings().operator_max_qubits, "Symmetrized Pauli operator")
    columns = np.arange(2 ** n)
    matrix = np.zeros((2 ** n, 2 ** n), dtype=np.complex128)
    count = 0
    for E in cls.orbit(n):
        targets, phases = _action(E.letters)
        matrix[targets, columns] += phases
        count += 1
    return matrix / count


def sym_error_dense(E: PauliString) -> np.ndarray:
    """Sym(E) = (1/n!) sum_sigma P_sigma^dagger E P_sigma."""
    return sym_class_dense(E.pauli_class(), E.n)


def sph_error_dense(E: PauliString) -> np.ndarray:
    """Sph(E): product of the symmetrizations of the weight-one factors of E, in order."""
    check_dense_qubits(E.n, get_settings().operator_max_qubits, "Spherical Pauli operator")
    result = np.eye(2 ** E.n, dtype=np.complex128)
    for factor in E.weight_one_factors():
        result = result @ sym_error_dense(factor)
    return result


def sph_expansion(E: PauliString, cutoff: float = CLASS_TOLERANCE) -> Dict[PauliClass, complex]:
    """
    Sph(E) in the basis of Sym(class), by Hilbert-Schmidt projection.

    Only classes of weight <= weight(E) can appear; coefficients below the
    cutoff are dropped.
    """
    sph = sph_error_dense(E)
    coefficients: Dict[PauliClass, complex] = {}
    for cls in pauli_classes(E.weight, E.n, include_identity=True):
        sym = sym_class_dense(cls, E.n)
        coefficient = complex(np.vdot(sym, sph) / np.vdot(sym, sym))
        if abs(coefficient) > cutoff:
            coefficients[cls] = coefficient
    return coefficients


def sym_matrix_element(n: int, w_bra: int, cls: PauliClass, w_ket: int) -> complex:
    """
    <D_{w_bra}^n | Sym(E) | D_{w_ket}^n> for E in the class, by counting.

    With i_X, i_Y, i_Z, i_I ones of the ket string under each letter block,
    E moves the weight to w_ket + n_X + n_Y - 2 i_X - 2 i_Y with phase
    i^{n_Y} (-1)^{i_Y + i_Z}; each placement occurs
    C(n_X, i_X) C(n_Y, i_Y) C(n_Z, i_Z) C(n_I, i_I) times.
    Returns 0 when no placement connects the two weights.
    """
    if cls.weight > n:
        raise InvalidInputError(f"Class {cls.label} does not fit on {n} qubits")
    if not (0 <= w_bra <= n and 0 <= w_ket <= n):
        return 0j

    n_rest = n - cls.weight
    total = 0
    for i_x in range(min(cls.n_x, w_ket) + 1):
        for i_y in range(min(cls.n_y, w_ket - i_x) + 1):
            if w_ket + cls.n_x + cls.n_y - 2 * i_x - 2 * i_y != w_bra:
                continue
            for i_z in range(min(cls.n_z, w_ket - i_x - i_y) + 1):
                i_r = w_ket - i_x - i_y - i_z
                if i_r > n_rest:
                    continue
                multiplicity = (
                    comb(cls.n_x, i_x, exact=True)
                    * comb(cls.n_y, i_y, exact=True)
                    * comb(cls.n_z, i_z, exact=True)
                    * comb(n_rest, i_r, exact=True)
                )
                total += -multiplicity if (i_y + i_z) % 2 else multiplicity
    if total == 0:
        return 0j

    normalization = comb(n, w_bra, exact=True) * comb(n, w_ket, exact=True)
    magnitude = math.sqrt(Fraction(total * total, normalization))
    value = math.copysign(magnitude, total)
    return (1j ** cls.n_y) * value
