"""
Code lengths: the Code-3 law and the lengths predicted by mu = nu + 1.
"""
from fractions import Fraction
from typing import Tuple
import logging

from spincodes.core.exceptions import InvalidInputError
from spincodes.features.angular.halfint import HalfInt
from spincodes.features.bindihedral import Irrep, first_spin_with_freedom
from spincodes.features.klengine import count_conditions_closed, correction_constant

logger = logging.getLogger(__name__)

CODE3_B = 4


def code3_length(d: int) -> int:
    """
    n = (3d^2 + 6d - 7 + 2 (d mod 8)) / 4 for odd d >= 3.

    Raises:
        InvalidInputError: for even d or d < 3
    """
    if d < 3 or d % 2 == 0:
        raise InvalidInputError(f"Code 3 needs an odd distance d >= 3, got {d}")
    numerator = 3 * d * d + 6 * d - 7 + 2 * (d % 8)
    return numerator // 4


def predicted_spin(rep: Irrep, d: int) -> Tuple[HalfInt, int, int]:
    """(j, mu, nu): the smallest spin with mu = nu + 1 free amplitudes."""
    nu = count_conditions_closed(rep, d)
    mu = nu + 1
    return first_spin_with_freedom(rep, mu), mu, nu


def predicted_length(rep: Irrep, d: int) -> int:
    """
    Smallest n at which the searcher has one more amplitude than conditions.

    Depends on the conjecture that such a system always has a real solution.
    """
    j, _, _ = predicted_spin(rep, d)
    return j.twice


def predicted_length_closed(rep: Irrep, d: int) -> int:
    """
    n = 3/4 d^2 + (b-1)/2 d + (8a^2 - 8ab - 8a + 2b + 3)/4 + 2bc + 2 kappa,
    kappa = s for even nu, b - s for odd nu.
    """
    b, a = rep.b, rep.a
    nu = count_conditions_closed(rep, d)
    s = Fraction(rep.two_s, 2)
    kappa = s if nu % 2 == 0 else b - s
    value = (
        Fraction(3 * d * d, 4)
        + Fraction((b - 1) * d, 2)
        + Fraction(8 * a * a - 8 * a * b - 8 * a + 2 * b + 3, 4)
        + 2 * b * correction_constant(rep, d)
        + 2 * kappa
    )
    if value.denominator != 1:
        raise InvalidInputError(f"Closed-form length {value} at {rep}, d={d} is not an integer")
    return int(value)


def code3_irrep(d: int, b: int = CODE3_B) -> Irrep:
    """Irrep of BD_{2b} with the smallest predicted length at distance d; ties go to the smallest a."""
    if d < 1 or d % 2 == 0:
        raise InvalidInputError(f"Distance must be a positive odd integer, got {d}")
    best = min(range(1, b + 1), key=lambda a: (predicted_length(Irrep(b, a), d), a))
    return Irrep(b, best)
