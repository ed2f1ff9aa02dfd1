"""
Code search: mu = nu + 1 free amplitudes, solve, verify independently, bootstrap.
"""
from dataclasses import dataclass
from typing import Optional
import logging

from spincodes.core.config import get_settings
from spincodes.core.exceptions import InvalidInputError, NumericalInconsistencyError, SearchExhaustedError
from spincodes.features.angular.halfint import HalfInt
from spincodes.features.bindihedral import Irrep, first_spin_with_freedom
from spincodes.features.dickemap.multiqubit import MultiqubitCode, bootstrap
from spincodes.features.klengine import SpinCode, count_conditions_closed, kl_check_full
from spincodes.models.schemas import KLReport, NotFoundReport, RepInfo, SearchConfig
from .solver import Solution, solve
from .system import QuadraticSystem, build_system

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchResult:
    """A found code with everything needed to re-check it."""

    spin_code: SpinCode
    code: MultiqubitCode
    solution: Solution
    system: QuadraticSystem
    verification: KLReport


class CodeSearchService:
    """Finds delta_a-covariant codes numerically."""

    def __init__(self):
        self.settings = get_settings()

    def search_at_spin(self, rep: Irrep, j: HalfInt, d: int, cfg: SearchConfig) -> SearchResult:
        """
        Build and solve the system at a given spin, then verify with the full KL check.

        Raises:
            SearchExhaustedError: if no restart converges
            NumericalInconsistencyError: if a converged solution fails the full check
        """
        system = build_system(rep, j, d)
        logger.info(f"Searching {rep} at j={j}, d={d}: nu={system.nu}, mu={system.mu}")
        try:
            solution = solve(system, cfg)
        except SearchExhaustedError as e:
            e.details.update({
                "rep": {"b": rep.b, "a": rep.a},
                "j": str(j),
                "d": d,
                "mu": system.mu,
                "nu": system.nu,
            })
            raise

        spin_code = SpinCode.from_amplitudes(rep, j, solution.amplitudes)
        verification = kl_check_full(spin_code, d, self.settings.verify_tolerance)
        if not verification.passed:
            raise NumericalInconsistencyError(
                f"Solution below tolerance ({solution.residual:.3e}) fails the full KL check "
                f"(max residual {verification.max_residual:.3e})",
                details={"rep": str(rep), "j": str(j), "d": d},
            )

        code = bootstrap(spin_code, d=d)
        logger.info(f"✓ Found {code} for {rep} after {solution.restarts_used} restarts")
        return SearchResult(
            spin_code=spin_code,
            code=code,
            solution=solution,
            system=system,
            verification=verification,
        )

    def search_code(
        self,
        rep: Irrep,
        d: int,
        cfg: Optional[SearchConfig] = None,
        escalate: int = 0,
        allow_conjectured: bool = False,
    ) -> SearchResult:
        """
        Search at the smallest spin with mu = nu + 1, then at up to `escalate` larger spins.

        Args:
            rep: Irrep
            d: Odd distance
            cfg: Search settings (default: from settings)
            escalate: Extra lattice spins tried after a not-found
            allow_conjectured: Permit d >= settings.conjectured_min_distance

        Raises:
            InvalidInputError: for d in the conjectured range without opt-in
            SearchExhaustedError: if every attempted spin fails
        """
        if d >= self.settings.conjectured_min_distance and not allow_conjectured:
            raise InvalidInputError(
                f"d={d} is in the conjectured range (d >= {self.settings.conjectured_min_distance}); "
                f"opt in explicitly to search it"
            )
        if escalate < 0:
            raise InvalidInputError(f"escalate must be non-negative, got {escalate}")

        cfg = cfg or SearchConfig.from_settings()
        mu = count_conditions_closed(rep, d) + 1

        last_error: Optional[SearchExhaustedError] = None
        for extra in range(escalate + 1):
            j = first_spin_with_freedom(rep, mu + extra)
            try:
                return self.search_at_spin(rep, j, d, cfg)
            except SearchExhaustedError as e:
                last_error = e
                if extra < escalate:
                    logger.warning(f"✗ Not found at j={j}; escalating to mu={mu + extra + 1}")
        raise last_error


def not_found_report(error: SearchExhaustedError) -> NotFoundReport:
    """Diagnostics of a failed search."""
    details = error.details
    rep = details.get("rep", {"b": 1, "a": 1})
    return NotFoundReport(
        rep=RepInfo(**rep),
        d=details.get("d", 0),
        j=details.get("j", ""),
        mu=details.get("mu", 0),
        nu=details.get("nu", 0),
        best_residual=error.best_residual,
        restarts_used=details.get("restarts_used", 0),
        definite_forms=details.get("definite_forms", []),
    )


# Global instance
code_search_service = CodeSearchService()


def search_code(rep: Irrep, d: int, cfg: Optional[SearchConfig] = None, **kwargs) -> SearchResult:
    return code_search_service.search_code(rep, d, cfg, **kwargs)
