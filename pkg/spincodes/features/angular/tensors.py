"""
Spherical tensor operators T^k_q on spin j.

(T^k_q)_{m+q, m} = sqrt((2k+1)/(2j+1)) <k q; j m | j m+q>, rows and columns
ordered m = +j, ..., -j. Entries are kept exact and turned into floats on demand.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple
import logging

import numpy as np

from spincodes.core.config import get_settings
from spincodes.core.exceptions import InvalidInputError, NumericalInconsistencyError, OutOfRangeError
from .clebsch import cg
from .halfint import HalfInt, SignedSqrtRational, check_spin, index_of, magnetic_numbers

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SphericalTensor:
    """Rank-k, component-q tensor on spin j; column m has its only entry in row m+q."""

    j: HalfInt
    k: int
    q: int
    entries: Tuple[Tuple[int, int, SignedSqrtRational], ...] = field(repr=False)

    @property
    def dim(self) -> int:
        return self.j.twice + 1

    @property
    def matrix(self) -> np.ndarray:
        """Real float matrix (read-only, cached)."""
        return tensor_matrix(self.j, self.k, self.q)

    def exact_entry(self, m_row: HalfInt, m_col: HalfInt) -> SignedSqrtRational:
        row, col = index_of(self.j, m_row), index_of(self.j, m_col)
        for r, c, value in self.entries:
            if r == row and c == col:
                return value
        return SignedSqrtRational.zero()


def _check_range(j: HalfInt, k: int, q: int) -> None:
    check_spin(j)
    if k < 0 or k > j.twice:
        raise OutOfRangeError(f"Rank k={k} outside 0 <= k <= 2j for j={j}")
    if abs(q) > k:
        raise OutOfRangeError(f"Component q={q} outside |q| <= k={k}")


@lru_cache(maxsize=None)
def spherical_tensor(j: HalfInt, k: int, q: int) -> SphericalTensor:
    """
    Build T^k_q on spin j exactly.

    The coupled rank sits in the first slot, <k q; j m | j m+q>, so T^1_0 is
    -sqrt(3 / ((2j+1) j (j+1))) diag(m).

    Raises:
        OutOfRangeError: if k > 2j or |q| > k
    """
    j = HalfInt.of(j)
    _check_range(j, k, q)

    prefactor = SignedSqrtRational.sqrt_of(Fraction(2 * k + 1, j.twice + 1))
    kk, qq = HalfInt.of(k), HalfInt.of(q)
    entries = []
    for m in magnetic_numbers(j):
        target = m + qq
        if abs(target.twice) > j.twice:
            continue
        coefficient = cg(kk, qq, j, m, j, target)
        if coefficient.is_zero:
            continue
        entries.append((index_of(j, target), index_of(j, m), prefactor * coefficient))

    return SphericalTensor(j=j, k=k, q=q, entries=tuple(entries))


@lru_cache(maxsize=None)
def tensor_matrix(j: HalfInt, k: int, q: int) -> np.ndarray:
    """Float matrix of T^k_q; read-only so cached copies can be shared across threads."""
    tensor = spherical_tensor(j, k, q)
    matrix = np.zeros((tensor.dim, tensor.dim), dtype=np.float64)
    for row, col, value in tensor.entries:
        matrix[row, col] = float(value)
    matrix.flags.writeable = False
    return matrix


def tensor_components(max_rank: int):
    """Yield (k, q) for 0 <= k <= max_rank, |q| <= k."""
    for k in range(max_rank + 1):
        for q in range(-k, k + 1):
            yield k, q


def decompose_product(t1: SphericalTensor, t2: SphericalTensor, cutoff: float = 1e-14) -> Dict[int, float]:
    """
    Expand T1 T2 = sum_k c_k T^k_{q1+q2} by trace projection.

    Args:
        t1, t2: Tensors on the same spin
        cutoff: Coefficients below this magnitude are dropped

    Returns:
        Map rank k -> coefficient c_k

    Raises:
        InvalidInputError: if the spins differ
        NumericalInconsistencyError: if the reconstruction misses the product
    """
    if t1.j != t2.j:
        raise InvalidInputError(f"Tensor spins differ: {t1.j} vs {t2.j}")

    j = t1.j
    q = t1.q + t2.q
    product = t1.matrix @ t2.matrix

    coefficients: Dict[int, float] = {}
    reconstruction = np.zeros_like(product)
    for k in range(abs(q), j.twice + 1):
        basis = tensor_matrix(j, k, q)
        # the basis is real, so T^dagger = T^T
        coefficient = float(np.trace(basis.T @ product))
        if abs(coefficient) > cutoff:
            coefficients[k] = coefficient
            reconstruction += coefficient * basis

    residual = float(np.max(np.abs(product - reconstruction))) if product.size else 0.0
    if residual > get_settings().product_tolerance:
        raise NumericalInconsistencyError(
            f"Product T^{t1.k}_{t1.q} T^{t2.k}_{t2.q} not reconstructed (residual {residual:.3e})"
        )

    logger.debug(f"T^{t1.k}_{t1.q} T^{t2.k}_{t2.q} on j={j}: ranks {sorted(coefficients)}")
    return coefficients
