"""
The binary dihedral group BD_{2b} = <X, P> with P = Ph(pi/b), and its
two-dimensional symplectic irreps delta_a.

Elements are normal-form words X^x P^p (x in {0,1}, p mod 4b), using
P^{4b} = 1, X^2 = P^{2b} = -1 and X P X^{-1} = P^{-1}.
"""
from dataclasses import dataclass
from math import gcd
from typing import List
import cmath
import math

import numpy as np

from spincodes.core.exceptions import InvalidInputError
from spincodes.features.angular.halfint import HalfInt


@dataclass(frozen=True)
class Irrep:
    """delta_a of BD_{2b}: X -> X, Ph(pi/b) -> Ph(pi/b)^{2a-1}."""

    b: int
    a: int

    def __post_init__(self):
        if self.b < 1:
            raise InvalidInputError(f"b must be positive, got {self.b}")
        if not 1 <= self.a <= self.b:
            raise InvalidInputError(f"a must satisfy 1 <= a <= b={self.b}, got {self.a}")

    @property
    def two_s(self) -> int:
        """2s = 2a - 1."""
        return 2 * self.a - 1

    @property
    def s(self) -> HalfInt:
        """Starting spin s = (2a-1)/2."""
        return HalfInt(self.two_s)

    @property
    def is_faithful(self) -> bool:
        return effective_degree(self) == 2 * self.b

    def __str__(self) -> str:
        return f"(BD_{2 * self.b}, delta_{self.a})"


@dataclass(frozen=True)
class GroupElement:
    """X^x P^p in BD_{2b}."""

    b: int
    x: int
    p: int

    def __post_init__(self):
        if self.b < 1:
            raise InvalidInputError(f"b must be positive, got {self.b}")
        if self.x not in (0, 1):
            raise InvalidInputError(f"x-exponent must be 0 or 1, got {self.x}")
        if not 0 <= self.p < 4 * self.b:
            object.__setattr__(self, "p", self.p % (4 * self.b))

    @property
    def order_of_p(self) -> int:
        return 4 * self.b

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if self.b != other.b:
            raise InvalidInputError(f"Elements of BD_{2 * self.b} and BD_{2 * other.b} do not multiply")
        if other.x == 0:
            return GroupElement(self.b, self.x, self.p + other.p)
        # P^p X = X P^{-p}
        if self.x == 0:
            return GroupElement(self.b, 1, other.p - self.p)
        # X X = P^{2b}
        return GroupElement(self.b, 0, 2 * self.b + other.p - self.p)

    def inverse(self) -> "GroupElement":
        if self.x == 0:
            return GroupElement(self.b, 0, -self.p)
        return GroupElement(self.b, 1, self.p + 2 * self.b)

    @property
    def is_identity(self) -> bool:
        return self.x == 0 and self.p == 0

    def su2_matrix(self) -> np.ndarray:
        """The defining 2x2 SU(2) matrix in the (m=+1/2, m=-1/2) basis."""
        return irrep_matrix(Irrep(self.b, 1), self)

    def label(self) -> str:
        if self.is_identity:
            return "I"
        phase = "" if self.p == 0 else (f"Ph(pi/{self.b})" if self.p == 1 else f"Ph(pi/{self.b})^{self.p}")
        if self.x and phase:
            return f"X*{phase}"
        return "X" if self.x else phase


def identity(b: int) -> GroupElement:
    return GroupElement(b, 0, 0)


def element_by_name(b: int, name: str) -> GroupElement:
    """
    Named elements of BD_{2b}.

    Args:
        b: Degree parameter
        name: one of I, X, Y, Z, P (= Ph(pi/b)), S, T

    Raises:
        InvalidInputError: if the gate is not in BD_{2b}
    """
    if name == "I":
        return identity(b)
    if name == "X":
        return GroupElement(b, 1, 0)
    if name == "P":
        return GroupElement(b, 0, 1)
    if name == "Z":
        return GroupElement(b, 0, b)
    if name == "Y":
        return GroupElement(b, 1, 3 * b)
    if name == "S":
        if b % 2:
            raise InvalidInputError(f"S is not in BD_{2 * b}")
        return GroupElement(b, 0, b // 2)
    if name == "T":
        if b % 4:
            raise InvalidInputError(f"T is not in BD_{2 * b}")
        return GroupElement(b, 0, b // 4)
    raise InvalidInputError(f"Unknown element name {name!r}")


def group_elements(b: int) -> List[GroupElement]:
    """All 8b elements."""
    return [GroupElement(b, x, p) for x in (0, 1) for p in range(4 * b)]


def generators(b: int) -> List[GroupElement]:
    """X, Z and Ph(pi/b)."""
    return [element_by_name(b, "X"), element_by_name(b, "Z"), element_by_name(b, "P")]


def _root(numerator: int, denominator: int) -> complex:
    """exp(2 pi i numerator / denominator) with the numerator reduced first."""
    return cmath.exp(2j * math.pi * (numerator % denominator) / denominator)


def irrep_matrix(rep: Irrep, g: GroupElement) -> np.ndarray:
    """
    delta_a(g) as a 2x2 unitary.

    The phases are the 4b-th roots of unity exp(-+ i pi (2a-1) p / 2b).
    """
    if g.b != rep.b:
        raise InvalidInputError(f"{g.label()} is not an element of BD_{2 * rep.b}")
    exponent = rep.two_s * g.p
    phase = np.diag([_root(-exponent, 4 * rep.b), _root(exponent, 4 * rep.b)])
    if g.x == 0:
        return phase
    x_matrix = np.array([[0, -1j], [-1j, 0]], dtype=np.complex128)
    return x_matrix @ phase


def effective_degree(rep: Irrep) -> int:
    """2b' = 2b / gcd(2b, 2a-1); delta_a is faithful iff 2b' = 2b."""
    return 2 * rep.b // gcd(2 * rep.b, rep.two_s)


def image_order(rep: Irrep) -> int:
    """Number of distinct matrices delta_a(g); equals 8b'."""
    seen = set()
    for g in group_elements(rep.b):
        matrix = irrep_matrix(rep, g)
        seen.add(tuple(np.round(matrix, 9).ravel().tolist()))
    return len(seen)


def is_exotic_degree(b: int) -> bool:
    """True iff b is not a power of two: then BD_{2b} holds a gate outside the Clifford hierarchy."""
    if b < 1:
        raise InvalidInputError(f"b must be positive, got {b}")
    return b & (b - 1) != 0
