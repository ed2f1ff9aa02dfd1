"""
Exact Clebsch-Gordan coefficients (Condon-Shortley convention).

Racah's closed formula evaluated with big-integer factorials, so values stay
exact for spins well past n/2 ~ 75 where doubles overflow.
"""
from fractions import Fraction
from functools import lru_cache
from math import factorial
import logging

from .halfint import HalfInt, SignedSqrtRational, check_pair

logger = logging.getLogger(__name__)


def cg(j1: HalfInt, m1: HalfInt, j2: HalfInt, m2: HalfInt, J: HalfInt, M: HalfInt) -> SignedSqrtRational:
    """
    <j1 m1; j2 m2 | J M>.

    Args:
        j1, m1, j2, m2, J, M: Angular momenta as HalfInt

    Returns:
        The coefficient as sign * sqrt(rational). Selection-rule and triangle
        violations give zero.

    Raises:
        InvalidInputError: if some j - m is not an integer or a spin is negative
    """
    j1, m1, j2, m2, J, M = (HalfInt.of(x) for x in (j1, m1, j2, m2, J, M))
    check_pair(j1, m1)
    check_pair(j2, m2)
    check_pair(J, M)
    return _cg_twice(j1.twice, m1.twice, j2.twice, m2.twice, J.twice, M.twice)


@lru_cache(maxsize=None)
def _cg_twice(t1: int, tm1: int, t2: int, tm2: int, T: int, TM: int) -> SignedSqrtRational:
    if TM != tm1 + tm2:
        return SignedSqrtRational.zero()
    if abs(tm1) > t1 or abs(tm2) > t2 or abs(TM) > T:
        return SignedSqrtRational.zero()
    if T < abs(t1 - t2) or T > t1 + t2 or (t1 + t2 + T) % 2:
        return SignedSqrtRational.zero()

    # all of these are integers once the checks above pass
    a1 = (t1 + t2 - T) // 2  # j1 + j2 - J
    a2 = (t1 - t2 + T) // 2  # j1 - j2 + J
    a3 = (-t1 + t2 + T) // 2  # -j1 + j2 + J
    a4 = (t1 + t2 + T) // 2 + 1  # j1 + j2 + J + 1
    j1_minus = (t1 - tm1) // 2
    j1_plus = (t1 + tm1) // 2
    j2_minus = (t2 - tm2) // 2
    j2_plus = (t2 + tm2) // 2
    J_minus = (T - TM) // 2
    J_plus = (T + TM) // 2

    prefactor = Fraction(
        (T + 1) * factorial(a1) * factorial(a2) * factorial(a3)
        * factorial(J_plus) * factorial(J_minus)
        * factorial(j1_minus) * factorial(j1_plus)
        * factorial(j2_minus) * factorial(j2_plus),
        factorial(a4),
    )

    # J - j2 + m1 and J - j1 - m2
    shift1 = (T - t2 + tm1) // 2
    shift2 = (T - t1 - tm2) // 2
    k_min = max(0, -shift1, -shift2)
    k_max = min(a1, j1_minus, j2_plus)

    total = Fraction(0)
    for k in range(k_min, k_max + 1):
        denominator = (
            factorial(k) * factorial(a1 - k) * factorial(j1_minus - k)
            * factorial(j2_plus - k) * factorial(shift1 + k) * factorial(shift2 + k)
        )
        total += Fraction((-1) ** k, denominator)

    if total == 0:
        return SignedSqrtRational.zero()
    return SignedSqrtRational.from_signed_square(1 if total > 0 else -1, prefactor * total * total)
