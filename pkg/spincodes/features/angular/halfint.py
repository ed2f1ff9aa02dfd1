"""
Exact half-integers and signed square roots of rationals.

Spins j, magnetic numbers m and starting spins s are stored as twice their
value so that no floating point ever touches them.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Union
import math

from spincodes.core.exceptions import InvalidInputError

Number = Union[int, Fraction, "HalfInt"]


@total_ordering
@dataclass(frozen=True)
class HalfInt:
    """A multiple of 1/2, held as `twice` = 2 * value."""

    twice: int

    @classmethod
    def of(cls, value: Union[int, Fraction, str, "HalfInt"]) -> "HalfInt":
        """Build from an int, a Fraction with denominator 1 or 2, a string, or a HalfInt."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        if isinstance(value, bool):
            raise InvalidInputError(f"Not a half-integer: {value!r}")
        if isinstance(value, int):
            return cls(2 * value)
        if isinstance(value, Fraction):
            doubled = 2 * value
            if doubled.denominator != 1:
                raise InvalidInputError(f"Not a half-integer: {value}")
            return cls(int(doubled))
        raise InvalidInputError(f"Not a half-integer: {value!r}")

    @classmethod
    def parse(cls, text: str) -> "HalfInt":
        """Parse '11/2', '-3/2', '4' or '4.5'."""
        try:
            value = Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidInputError(f"Cannot parse half-integer from {text!r}") from e
        return cls.of(value)

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice, 2)

    @property
    def is_integral(self) -> bool:
        return self.twice % 2 == 0

    @property
    def is_half_integral(self) -> bool:
        return self.twice % 2 != 0

    def to_int(self) -> int:
        if not self.is_integral:
            raise InvalidInputError(f"{self} is not an integer")
        return self.twice // 2

    def __float__(self) -> float:
        return self.twice / 2

    def __add__(self, other: Number) -> "HalfInt":
        return HalfInt(self.twice + HalfInt.of(other).twice)

    __radd__ = __add__

    def __sub__(self, other: Number) -> "HalfInt":
        return HalfInt(self.twice - HalfInt.of(other).twice)

    def __rsub__(self, other: Number) -> "HalfInt":
        return HalfInt(HalfInt.of(other).twice - self.twice)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __abs__(self) -> "HalfInt":
        return HalfInt(abs(self.twice))

    def __lt__(self, other: Number) -> bool:
        return self.twice < HalfInt.of(other).twice

    def __eq__(self, other: object) -> bool:
        if isinstance(other, HalfInt):
            return self.twice == other.twice
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Fraction(self.twice, 2) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("HalfInt", self.twice))

    def __str__(self) -> str:
        if self.is_integral:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"


def check_spin(j: HalfInt) -> None:
    """Spins are non-negative."""
    if j.twice < 0:
        raise InvalidInputError(f"Spin must be non-negative, got {j}")


def check_pair(j: HalfInt, m: HalfInt) -> None:
    """(j, m) needs j >= 0 and j - m integral; |m| > j is allowed and simply gives zero amplitudes."""
    check_spin(j)
    if (j.twice - m.twice) % 2 != 0:
        raise InvalidInputError(f"j - m must be an integer, got j={j}, m={m}")


def magnetic_numbers(j: HalfInt) -> list:
    """m = j, j-1, ..., -j (index 0 is m = +j)."""
    check_spin(j)
    return [HalfInt(j.twice - 2 * i) for i in range(j.twice + 1)]


def index_of(j: HalfInt, m: HalfInt) -> int:
    """Matrix index of |j, m> in the m-descending order; equals the Dicke weight j - m."""
    return (j.twice - m.twice) // 2


@dataclass(frozen=True)
class SignedSqrtRational:
    """sign * sqrt(radicand) with an exact non-negative rational radicand."""

    sign: int
    radicand: Fraction

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise InvalidInputError(f"sign must be -1, 0 or 1, got {self.sign}")
        if self.radicand < 0:
            raise InvalidInputError(f"radicand must be non-negative, got {self.radicand}")
        if (self.sign == 0) != (self.radicand == 0):
            raise InvalidInputError("radicand is zero exactly when sign is zero")

    @classmethod
    def zero(cls) -> "SignedSqrtRational":
        return cls(0, Fraction(0))

    @classmethod
    def from_signed_square(cls, sign: int, square: Fraction) -> "SignedSqrtRational":
        if square == 0 or sign == 0:
            return cls.zero()
        return cls(1 if sign > 0 else -1, Fraction(square))

    @classmethod
    def sqrt_of(cls, radicand: Union[int, Fraction]) -> "SignedSqrtRational":
        return cls.from_signed_square(1, Fraction(radicand))

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def square(self) -> Fraction:
        """Exact square (the sign is lost, as it should be)."""
        return self.radicand

    def signed_square(self) -> Fraction:
        return self.sign * self.radicand

    def __mul__(self, other: "SignedSqrtRational") -> "SignedSqrtRational":
        if not isinstance(other, SignedSqrtRational):
            return NotImplemented
        return SignedSqrtRational.from_signed_square(self.sign * other.sign, self.radicand * other.radicand)

    def __neg__(self) -> "SignedSqrtRational":
        return SignedSqrtRational.from_signed_square(-self.sign, self.radicand)

    def __float__(self) -> float:
        if self.sign == 0:
            return 0.0
        return self.sign * math.sqrt(self.radicand)

    def __str__(self) -> str:
        if self.sign == 0:
            return "0"
        prefix = "-" if self.sign < 0 else ""
        return f"{prefix}sqrt({self.radicand})"
