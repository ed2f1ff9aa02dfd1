"""
Branching rules SU(2) -> BD_{2b} for the symplectic irreps.

A delta_a-covariant codeword |0> lives on m in s + 2bZ (s = (2a-1)/2) and
|1> on the mirrored lattice. The number of such m in [-j, j] is the
multiplicity of delta_a in spin j, which is also what the character inner
product gives.
"""
from typing import Dict, List
import logging
import math

from spincodes.core.exceptions import InvalidInputError, NumericalInconsistencyError, UnsupportedSpinError
from spincodes.features.angular.halfint import HalfInt, check_spin
from .group import Irrep, group_elements

logger = logging.getLogger(__name__)

ROUNDING_GUARD = 1e-6


def _require_half_integral(j: HalfInt) -> HalfInt:
    j = HalfInt.of(j)
    check_spin(j)
    if not j.is_half_integral:
        raise UnsupportedSpinError(f"Symplectic irreps only occur at half-integral spin, got j={j}")
    return j


def support_lattice(rep: Irrep, j: HalfInt) -> List[HalfInt]:
    """
    (s + 2bZ) intersected with [-j, j], in descending order.

    Raises:
        UnsupportedSpinError: for integral j
    """
    j = _require_half_integral(j)
    period = 4 * rep.b
    # largest 2m <= 2j with 2m = 2a - 1 (mod 4b)
    top = j.twice - ((j.twice - rep.two_s) % period)
    return [HalfInt(tm) for tm in range(top, -j.twice - 1, -period)]


def spin_character(j: HalfInt, alpha: float) -> float:
    """chi_j(Ph(alpha)) = sin((2j+1) alpha/2) / sin(alpha/2), with the limit at alpha in 2 pi Z."""
    half = alpha / 2
    dim = j.twice + 1
    denominator = math.sin(half)
    if abs(denominator) < 1e-12:
        return dim * math.cos(dim * half) / math.cos(half)
    return math.sin(dim * half) / denominator


def irrep_character(rep: Irrep, x: int, p: int) -> complex:
    """chi_{delta_a}(X^x P^p): zero on the X coset, 2 cos(pi (2a-1) p / 2b) otherwise."""
    if x:
        return 0j
    return complex(2 * math.cos(math.pi * rep.two_s * p / (2 * rep.b)))


def multiplicity(rep: Irrep, j: HalfInt) -> int:
    """
    Multiplicity of delta_a in spin j via the character inner product over all 8b elements.

    Raises:
        UnsupportedSpinError: for integral j
        NumericalInconsistencyError: if the inner product is not near an integer,
            or disagrees with the support lattice size
    """
    j = _require_half_integral(j)
    total = 0j
    for g in group_elements(rep.b):
        if g.x:
            # chi_j vanishes on the X coset at half-integral j
            continue
        total += irrep_character(rep, g.x, g.p).conjugate() * spin_character(j, math.pi * g.p / rep.b)
    value = total / (8 * rep.b)

    rounded = round(value.real)
    if abs(value - rounded) > ROUNDING_GUARD:
        raise NumericalInconsistencyError(f"Character inner product {value} for {rep} at j={j} is not an integer")

    lattice_size = len(support_lattice(rep, j))
    if rounded != lattice_size:
        raise NumericalInconsistencyError(
            f"Multiplicity {rounded} of {rep} at j={j} differs from lattice size {lattice_size}"
        )
    return int(rounded)


def first_spin_with_freedom(rep: Irrep, mu: int) -> HalfInt:
    """
    Smallest spin in which delta_a has multiplicity mu.

    j = mu*b + s - b for odd mu and j = mu*b - s for even mu.
    """
    if mu < 1:
        raise InvalidInputError(f"Multiplicity must be at least 1, got {mu}")
    if mu % 2:
        return HalfInt(2 * mu * rep.b + rep.two_s - 2 * rep.b)
    return HalfInt(2 * mu * rep.b - rep.two_s)


def branching_table(b: int, j_max: HalfInt) -> List[Dict]:
    """
    Multiplicities of every delta_a in all half-integral j <= j_max.

    Returns:
        Rows {'j': HalfInt, 'multiplicities': [m_1, ..., m_b]}
    """
    j_max = HalfInt.of(j_max)
    reps = [Irrep(b, a) for a in range(1, b + 1)]
    rows = []
    for twice in range(1, j_max.twice + 1, 2):
        j = HalfInt(twice)
        rows.append({"j": j, "multiplicities": [multiplicity(rep, j) for rep in reps]})
    logger.info(f"✓ Branching table for BD_{2 * b}: {len(rows)} spins")
    return rows

