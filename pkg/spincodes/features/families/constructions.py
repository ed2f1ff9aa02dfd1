"""
Closed-form code families.

    family_d3   d=3 codes for every middle irrep 1 < a < b
    code1       ((2b+3, 2, 3)) for delta_{b-1} of BD_2b
    code2       code1 at b = 2^(r-1), transversal group Q^(r)
    code3       smallest predicted code for BD_8 at distance d (searched for d > 3)
"""
from fractions import Fraction
from typing import Optional, Tuple
import logging

from spincodes.core.exceptions import InsufficientSpinError, InvalidInputError, NotMiddleIrrepError, UnsupportedSpinError
from spincodes.features.angular.halfint import HalfInt, SignedSqrtRational
from spincodes.features.bindihedral import Irrep
from spincodes.features.dickemap.multiqubit import MultiqubitCode, bootstrap
from spincodes.features.klengine import SpinCode
from spincodes.features.searcher.search_service import code_search_service
from spincodes.models.schemas import SearchConfig
from spincodes.utils.helpers import format_exact_sqrt
from .lengths import code3_irrep

logger = logging.getLogger(__name__)


def family_d3(rep: Irrep, j: HalfInt) -> SpinCode:
    """
    The two-point d=3 code: sqrt((2b-s)/2b) at m = s and sqrt(s/2b) at m = s - 2b.

    Any larger lattice points stay empty.

    Raises:
        NotMiddleIrrepError: for a = 1 or a = b
        UnsupportedSpinError: for integral j
        InsufficientSpinError: for j < 2b - s
    """
    j = HalfInt.of(j)
    if not 1 < rep.a < rep.b:
        raise NotMiddleIrrepError(f"The d=3 family needs 1 < a < b, got {rep}")
    if not j.is_half_integral:
        raise UnsupportedSpinError(f"Spin must be half-integral, got j={j}")
    if j.twice < 4 * rep.b - rep.two_s:
        raise InsufficientSpinError(f"{rep} needs j >= 2b - s = {HalfInt(4 * rep.b - rep.two_s)}, got j={j}")

    upper = SignedSqrtRational.sqrt_of(Fraction(4 * rep.b - rep.two_s, 4 * rep.b))
    lower = SignedSqrtRational.sqrt_of(Fraction(rep.two_s, 4 * rep.b))
    s = rep.s
    amp0 = {s: float(upper), s - 2 * rep.b: float(lower)}
    exact = {
        s: format_exact_sqrt(upper.radicand),
        s - 2 * rep.b: format_exact_sqrt(lower.radicand),
    }
    return SpinCode(j=j, rep=rep, amp0=amp0, exact=exact)


def code1(b: int) -> MultiqubitCode:
    """
    ((2b+3, 2, 3)) from the d=3 family at a = b-1, j = (2b+3)/2.

    The transversal group is BD_2b, or BD_{2b/3} when 3 divides b.

    Raises:
        InvalidInputError: for b < 3
    """
    if b < 3:
        raise InvalidInputError(f"Code 1 needs b >= 3, got {b}")
    return _code1(b, group_name=None)


def _code1(b: int, group_name: Optional[str]) -> MultiqubitCode:
    rep = Irrep(b, b - 1)
    spin_code = family_d3(rep, HalfInt(2 * b + 3))
    code = bootstrap(spin_code, d=3, group_name=group_name)
    logger.info(f"✓ Code 1 at b={b}: {code} with transversal BD_{code.group_info().degree}")
    return code


def code2(r: int) -> MultiqubitCode:
    """
    Code 1 at b = 2^(r-1): ((2^r + 3, 2, 3, Q^(r))).

    Raises:
        InvalidInputError: for r < 3
    """
    if r < 3:
        raise InvalidInputError(f"Code 2 needs r >= 3, got {r}")
    return _code1(2 ** (r - 1), group_name=f"Q^({r})")


def code3(
    d: int,
    cfg: Optional[SearchConfig] = None,
    allow_conjectured: bool = False,
    escalate: int = 0,
) -> Tuple[MultiqubitCode, Optional[float]]:
    """
    Code 3 at distance d: the BD_8 irrep with the smallest predicted length.

    d = 3 is the closed-form code1(4); larger d go through the searcher, which
    tries up to `escalate` larger spins after a not-found.

    Returns:
        (code, search residual or None for the closed form)

    Raises:
        SearchExhaustedError: if the search does not converge
    """
    if d == 3:
        return code1(4), None

    rep = code3_irrep(d)
    logger.info(f"Code 3 at d={d}: searching {rep}")
    result = code_search_service.search_code(
        rep,
        d,
        cfg or SearchConfig.from_settings(),
        escalate=escalate,
        allow_conjectured=allow_conjectured,
    )
    return result.code, result.solution.residual
