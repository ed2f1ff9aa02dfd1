"""
Random-restart Levenberg-Marquardt on the unit sphere.

Each restart minimizes sum_i (x^T B_i x)^2 from a uniform random unit
vector. Steps live in the tangent space and are retracted by normalizing;
when the damping blows up the restart falls back to an Armijo gradient step.
A restart that reaches the tolerance keeps polishing for a few iterations so
the independent KL re-check passes comfortably.
"""
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple
import logging
import math
import threading

import numpy as np

from spincodes.core.exceptions import SearchExhaustedError
from spincodes.models.schemas import SearchConfig
from .system import QuadraticSystem, definite_forms

logger = logging.getLogger(__name__)

TAU = 1e-3  # initial damping relative to max diag(J^T J)
LAMBDA_CEILING = 1e16
POLISH_ITERATIONS = 25
POLISH_FLOOR = 1e-30
GRADIENT_FLOOR = 1e-24
ARMIJO_C1 = 1e-4
ARMIJO_SHRINK = 0.5
ALPHA_MIN = 1e-16


@dataclass(frozen=True)
class Solution:
    """A unit vector on the lattice with its objective value."""

    amplitudes: np.ndarray
    residual: float
    restarts_used: int
    iterations: int = 0


@dataclass(frozen=True)
class RestartOutcome:
    index: int
    x: np.ndarray
    residual: float
    iterations: int


def canonicalize(x: np.ndarray, cutoff: float = 1e-14) -> np.ndarray:
    """Flip the sign so the first non-negligible amplitude is positive."""
    for value in x:
        if abs(value) > cutoff:
            return x if value > 0 else -x
    return x


def _retract(x: np.ndarray, step: np.ndarray) -> np.ndarray:
    moved = x + step
    return moved / np.linalg.norm(moved)


def _armijo_step(system: QuadraticSystem, x: np.ndarray, f: float, g: np.ndarray) -> Optional[Tuple[np.ndarray, float]]:
    """Backtracking along -g; None when no acceptable step exists."""
    slope = 2.0 * float(g @ g)
    alpha = 1.0
    while alpha > ALPHA_MIN:
        candidate = _retract(x, -alpha * g)
        f_candidate = system.objective(candidate)
        if f_candidate <= f - ARMIJO_C1 * alpha * slope:
            return candidate, f_candidate
        alpha *= ARMIJO_SHRINK
    return None


def local_solve(system: QuadraticSystem, x0: np.ndarray, cfg: SearchConfig) -> Tuple[np.ndarray, float, int]:
    """
    One restart.

    Returns:
        (unit vector, objective, iterations used)
    """
    x = x0 / np.linalg.norm(x0)
    r = system.residuals(x)
    f = float(r @ r)
    damping: Optional[float] = None
    v = 2.0
    converged_at: Optional[int] = None
    identity = np.eye(system.dim)

    iteration = 0
    for iteration in range(cfg.max_iterations + POLISH_ITERATIONS):
        if f < cfg.tolerance:
            if converged_at is None:
                converged_at = iteration
            if f < POLISH_FLOOR or iteration - converged_at >= POLISH_ITERATIONS:
                break
        elif iteration >= cfg.max_iterations:
            break

        jacobian = system.tangent_jacobian(x)
        g = jacobian.T @ r
        if float(np.linalg.norm(g)) < GRADIENT_FLOOR:
            break

        h = jacobian.T @ jacobian
        if damping is None:
            damping = TAU * max(float(np.max(np.diag(h))), 1e-300)

        step = np.linalg.solve(h + damping * identity, -g)
        # keep the step tangent
        step -= x * float(x @ step)
        x_new = _retract(x, step)
        r_new = system.residuals(x_new)
        f_new = float(r_new @ r_new)

        linear = r + jacobian @ step
        predicted = f - float(linear @ linear)
        rho = (f - f_new) / predicted if predicted > 0 else -1.0

        if rho > 0:
            x, r, f = x_new, r_new, f_new
            damping *= max(1.0 / 3.0, 1.0 - (2.0 * rho - 1.0) ** 3)
            v = 2.0
            continue

        damping *= v
        v *= 2.0
        if damping > LAMBDA_CEILING:
            fallback = _armijo_step(system, x, f, g)
            if fallback is None:
                break
            x, f = fallback
            r = system.residuals(x)
            damping, v = None, 2.0

    return x, f, iteration + 1


def restart_seeds(cfg: SearchConfig) -> List[np.random.SeedSequence]:
    """One independent sub-seed per restart, spawned from the master seed."""
    return np.random.SeedSequence(cfg.rng_seed).spawn(cfg.restarts)


def solve(system: QuadraticSystem, cfg: SearchConfig) -> Solution:
    """
    Minimize sum_i (x^T B_i x)^2 over the unit sphere from random starts.

    Restarts run on a thread pool. Once restart i succeeds, restarts with a
    higher index are skipped; the lowest-index success is returned, so the
    result only depends on the seed.

    Raises:
        SearchExhaustedError: if no restart gets below cfg.tolerance
    """
    seeds = restart_seeds(cfg)
    lock = threading.Lock()
    first_success = [math.inf]

    def run(index: int) -> Optional[RestartOutcome]:
        with lock:
            if index > first_success[0]:
                return None
        rng = np.random.default_rng(seeds[index])
        x0 = rng.standard_normal(system.dim)
        x, f, iterations = local_solve(system, x0, cfg)
        return RestartOutcome(index=index, x=x, residual=f, iterations=iterations)

    outcomes: Dict[int, RestartOutcome] = {}
    workers = max(1, min(cfg.max_workers or 1, cfg.restarts))

    if workers == 1:
        for index in range(cfg.restarts):
            outcome = run(index)
            outcomes[index] = outcome
            if outcome.residual < cfg.tolerance:
                first_success[0] = index
                break
    else:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            future_to_index = {executor.submit(run, index): index for index in range(cfg.restarts)}
            for future in as_completed(future_to_index):
                if future.cancelled():
                    continue
                outcome = future.result()
                if outcome is None:
                    continue
                outcomes[outcome.index] = outcome
                if outcome.residual < cfg.tolerance:
                    with lock:
                        first_success[0] = min(first_success[0], outcome.index)
                    for pending, index in future_to_index.items():
                        if index > first_success[0]:
                            pending.cancel()

    if first_success[0] < math.inf:
        winner = outcomes[int(first_success[0])]
        logger.info(
            f"✓ Restart {winner.index} solved nu={system.nu}, mu={system.mu} "
            f"(residual {winner.residual:.3e}, {winner.iterations} iterations)"
        )
        return Solution(
            amplitudes=canonicalize(winner.x),
            residual=winner.residual,
            restarts_used=winner.index + 1,
            iterations=winner.iterations,
        )

    best = min(outcomes.values(), key=lambda outcome: (outcome.residual, outcome.index))
    blocked = definite_forms(system)
    logger.warning(
        f"✗ No solution in {cfg.restarts} restarts for nu={system.nu}, mu={system.mu}; "
        f"best residual {best.residual:.3e}"
    )
    raise SearchExhaustedError(
        f"No restart reached tolerance {cfg.tolerance:g} (best {best.residual:.3e})",
        best_residual=best.residual,
        details={"restarts_used": cfg.restarts, "definite_forms": blocked},
    )
