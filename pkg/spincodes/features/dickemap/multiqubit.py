"""
Permutationally invariant two-dimensional qubit codes and the Dicke bootstrap.

|j, m> maps to the Dicke state |D_w^n> with n = 2j and w = j - m, so a spin
vector in the m-descending basis is already the Dicke-basis vector.
"""
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Optional, Tuple
import logging
import math

import numpy as np
from scipy.special import comb

from spincodes.core.config import get_settings
from spincodes.core.exceptions import InvalidInputError, ResourceLimitError
from spincodes.features.angular.halfint import HalfInt
from spincodes.features.bindihedral import Irrep, effective_degree, is_exotic_degree
from spincodes.features.klengine import SpinCode
from spincodes.models.schemas import CodeParams, GroupInfo, RepInfo

logger = logging.getLogger(__name__)

LATTICE = "lattice"
SWAPPED = "swapped"
LABELINGS = (LATTICE, SWAPPED)

NORM_TOLERANCE = 1e-12


@dataclass(frozen=True)
class MultiqubitCode:
    """
    A ((n, 2)) code spanned by Dicke states.

    amp0 is the logical zero in the lattice labeling; the logical one is its
    mirror amp1(w) = amp0(n - w). `rep` and `j` record the originating spin
    code when the code was bootstrapped.
    """

    n: int
    amp0: Dict[int, float] = field(hash=False)
    rep: Optional[Irrep] = None
    d: Optional[int] = None
    exact: Optional[Dict[int, str]] = field(default=None, hash=False, compare=False)
    group_name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInputError(f"Qubit count must be positive, got {self.n}")
        for w in self.amp0:
            if not 0 <= w <= self.n:
                raise InvalidInputError(f"Dicke weight {w} outside 0..{self.n}")
        norm = math.fsum(value * value for value in self.amp0.values())
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise InvalidInputError(f"Codeword is not normalized (norm^2 = {norm!r})")
        if self.rep is not None:
            period = 2 * self.rep.b
            residues = {w % period for w in self.amp0}
            if len(residues) > 1:
                raise InvalidInputError(f"Support weights {sorted(self.amp0)} are not congruent mod {period}")

    @property
    def j(self) -> HalfInt:
        return HalfInt(self.n)

    @property
    def amp1(self) -> Dict[int, float]:
        return {self.n - w: value for w, value in self.amp0.items()}

    @property
    def has_provenance(self) -> bool:
        return self.rep is not None

    def presented(self, labeling: str = SWAPPED) -> Tuple[Dict[int, float], Dict[int, float]]:
        """
        (logical zero, logical one) as weight -> amplitude maps.

        The swapped labeling exchanges the two lattice codewords, so its logical zero
        contains |D_0>.
        """
        if labeling not in LABELINGS:
            raise InvalidInputError(f"Unknown labeling {labeling!r}; expected one of {LABELINGS}")
        if labeling == LATTICE:
            return dict(self.amp0), self.amp1
        return self.amp1, dict(self.amp0)

    def presented_exact(self, labeling: str = SWAPPED) -> Dict[int, str]:
        if not self.exact:
            return {}
        if labeling == LATTICE:
            return dict(self.exact)
        return {self.n - w: text for w, text in self.exact.items()}

    @classmethod
    def from_presented(
        cls,
        n: int,
        zero: Dict[int, float],
        labeling: str = SWAPPED,
        rep: Optional[Irrep] = None,
        d: Optional[int] = None,
        exact: Optional[Dict[int, str]] = None,
        group_name: Optional[str] = None,
    ) -> "MultiqubitCode":
        """Inverse of presented(): rebuild from a logical zero given in either labeling."""
        if labeling not in LABELINGS:
            raise InvalidInputError(f"Unknown labeling {labeling!r}; expected one of {LABELINGS}")
        if labeling == SWAPPED:
            zero = {n - w: value for w, value in zero.items()}
            exact = {n - w: text for w, text in exact.items()} if exact else None
        return cls(n=n, amp0=dict(zero), rep=rep, d=d, exact=exact, group_name=group_name)

    def dicke_vectors(self) -> Tuple[np.ndarray, np.ndarray]:
        """Codewords as (n+1)-vectors in the Dicke basis (index = weight)."""
        zero = np.zeros(self.n + 1)
        one = np.zeros(self.n + 1)
        for w, value in self.amp0.items():
            zero[w] = value
            one[self.n - w] = value
        return zero, one

    def dense_vectors(self) -> Tuple[np.ndarray, np.ndarray]:
        """Codewords as 2^n state vectors (qubit 0 is the most significant bit)."""
        zero = np.zeros(2 ** self.n)
        one = np.zeros(2 ** self.n)
        for w, value in self.amp0.items():
            zero += value * dicke_dense(self.n, w)
            one += value * dicke_dense(self.n, self.n - w)
        return zero, one

    def group_info(self) -> Optional[GroupInfo]:
        """Transversal group inherited from the spin code, or None without provenance."""
        if self.rep is None:
            return None
        degree = effective_degree(self.rep)
        return GroupInfo(
            degree=degree,
            faithful=degree == 2 * self.rep.b,
            exotic=is_exotic_degree(degree // 2),
            generators=["X", "Z", f"Ph(pi/{self.rep.b})^{self.rep.two_s}"],
            name=self.group_name,
        )

    def params(self) -> Optional[CodeParams]:
        if self.rep is None or self.d is None:
            return None
        return CodeParams(
            n=self.n,
            d=self.d,
            rep=RepInfo(b=self.rep.b, a=self.rep.a),
            group=self.group_info(),
        )

    def spin_code(self) -> SpinCode:
        """Undo the bootstrap."""
        if self.rep is None:
            raise InvalidInputError("Code has no spin provenance")
        j = self.j
        amp0 = {HalfInt(j.twice - 2 * w): value for w, value in self.amp0.items()}
        return SpinCode(j=j, rep=self.rep, amp0=amp0)

    def __str__(self) -> str:
        d = self.d if self.d is not None else "?"
        return f"(({self.n}, 2, {d}))"


def bootstrap(code: SpinCode, d: Optional[int] = None, group_name: Optional[str] = None) -> MultiqubitCode:
    """
    Carry a spin code to n = 2j qubits: amplitude at weight w = j - m is the amplitude at m.

    Distance and transversal group are inherited.
    """
    j = code.j
    amp0 = {(j.twice - m.twice) // 2: value for m, value in code.amp0.items()}
    exact = None
    if code.exact:
        exact = {(j.twice - m.twice) // 2: text for m, text in code.exact.items()}
    result = MultiqubitCode(n=j.twice, amp0=amp0, rep=code.rep, d=d, exact=exact, group_name=group_name)
    logger.debug(f"Bootstrapped {code} to {result}")
    return result


@lru_cache(maxsize=8)
def popcounts(n: int) -> np.ndarray:
    """Hamming weight of every n-bit string, read-only."""
    indices = np.arange(2 ** n, dtype=np.int64)
    counts = np.zeros(2 ** n, dtype=np.int64)
    for bit in range(n):
        counts += (indices >> bit) & 1
    counts.flags.writeable = False
    return counts


def check_dense_qubits(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise ResourceLimitError(f"{what} on {n} qubits exceeds the {limit}-qubit guard")


def dicke_dense(n: int, w: int) -> np.ndarray:
    """
    |D_w^n> as a 2^n vector.

    Raises:
        InvalidInputError: if w is outside 0..n
        ResourceLimitError: if n exceeds settings.dicke_dense_max_qubits
    """
    if n < 0 or not 0 <= w <= n:
        raise InvalidInputError(f"Dicke weight {w} outside 0..{n}")
    check_dense_qubits(n, get_settings().dicke_dense_max_qubits, "Dense Dicke state")
    vector = np.zeros(2 ** n)
    vector[popcounts(n) == w] = 1.0 / math.sqrt(comb(n, w, exact=True))
    return vector
