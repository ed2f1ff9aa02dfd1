"""
The reduced KL conditions for real delta_a-covariant codes, and how many there are.

Only odd ranks k <= d-2 survive. On-diagonal conditions sit at q = 0 mod 2b
with q >= 0, off-diagonal ones at q = 2a-1 mod 2b.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple
import logging

from spincodes.core.exceptions import InvalidInputError, NumericalInconsistencyError
from spincodes.features.bindihedral import Irrep

logger = logging.getLogger(__name__)

ON_DIAG = "on-diag"
OFF_DIAG = "off-diag"


@dataclass(frozen=True)
class ReducedCondition:
    """One surviving condition: a (kind, k, q) triple."""

    kind: str
    k: int
    q: int

    def __str__(self) -> str:
        return f"{self.kind}(k={self.k}, q={self.q})"


def _check_odd(d: int) -> int:
    if d < 1 or d % 2 == 0:
        raise InvalidInputError(f"Distance must be a positive odd integer, got {d}")
    return (d - 1) // 2


def reduced_conditions(rep: Irrep, d: int) -> List[ReducedCondition]:
    """
    Every condition left after the symmetry reduction, for distance d.

    Raises:
        InvalidInputError: for even or non-positive d
    """
    _check_odd(d)
    period = 2 * rep.b
    conditions: List[ReducedCondition] = []
    for k in range(1, d - 1, 2):
        for q in range(0, k + 1, period):
            conditions.append(ReducedCondition(ON_DIAG, k, q))
        # q = 2s + period * r with |q| <= k
        first = -((k + rep.two_s) // period)
        last = (k - rep.two_s) // period
        for r in range(first, last + 1):
            conditions.append(ReducedCondition(OFF_DIAG, k, rep.two_s + period * r))
    return conditions


def count_conditions(rep: Irrep, d: int) -> Tuple[int, int]:
    """
    (nu_on, nu_off) by direct summation over odd k <= d-2.

    Raises:
        InvalidInputError: for even or non-positive d
    """
    _check_odd(d)
    period = 2 * rep.b
    nu_on = sum(1 + k // period for k in range(1, d - 1, 2))
    nu_off = sum(
        1 + (k - rep.two_s) // period + (k + rep.two_s) // period
        for k in range(1, d - 1, 2)
    )
    return nu_on, nu_off


def _bracket(value: Fraction, b: int) -> Fraction:
    """[x]_b = x mod b, non-negative, exact for half-integers."""
    return Fraction(value) % b


def _c_on(b: int, t: int) -> Fraction:
    bt = _bracket(t, b)
    return bt * (bt - 2 * _bracket(Fraction(2 * t - 1, 2), b) + b - 1) / (2 * b)


def _c_off(b: int, a: int, t: int) -> Fraction:
    x = _bracket(t + 1 - a, b)
    y = _bracket(t - a, b)
    u = _bracket(t + a, b)
    v = _bracket(t + a - 1, b)
    return (x * x + x * (b - 2 - 2 * y) + u * (b - 2 - 2 * v + u)) / (2 * b)


def _as_int(value: Fraction, label: str) -> int:
    if value.denominator != 1:
        raise NumericalInconsistencyError(f"Closed form for {label} is not an integer: {value}")
    return int(value)


def count_on_diag_closed(rep: Irrep, d: int) -> int:
    """nu_on = t^2/(2b) + t/2 + c_on with d = 2t+1."""
    t = _check_odd(d)
    b = rep.b
    value = Fraction(t * t, 2 * b) + Fraction(t, 2) + _c_on(b, t)
    return _as_int(value, f"nu_on at {rep}, d={d}")


def count_off_diag_closed(rep: Irrep, d: int) -> int:
    """nu_off = t^2/b + t/b + (2a(a-b-1)+b+1)/(2b) + c_off with d = 2t+1."""
    t = _check_odd(d)
    b, a = rep.b, rep.a
    value = (
        Fraction(t * t, b)
        + Fraction(t, b)
        + Fraction(2 * a * (a - b - 1) + b + 1, 2 * b)
        + _c_off(b, a, t)
    )
    return _as_int(value, f"nu_off at {rep}, d={d}")


def correction_constant(rep: Irrep, d: int) -> Fraction:
    """The periodic correction c of the closed form; lies in [0, 3b]."""
    t = _check_odd(d)
    return _c_on(rep.b, t) + _c_off(rep.b, rep.a, t)


def count_conditions_closed(rep: Irrep, d: int) -> int:
    """
    nu = (3/2b) t^2 + ((2+b)/2b) t + (2a(a-b-1)+b+1)/(2b) + c for d = 2t+1.

    Raises:
        InvalidInputError: for even or non-positive d
        NumericalInconsistencyError: if the closed form is not an integer
    """
    t = _check_odd(d)
    b, a = rep.b, rep.a
    value = (
        Fraction(3 * t * t, 2 * b)
        + Fraction((2 + b) * t, 2 * b)
        + Fraction(2 * a * (a - b - 1) + b + 1, 2 * b)
        + correction_constant(rep, d)
    )
    return _as_int(value, f"nu at {rep}, d={d}")
