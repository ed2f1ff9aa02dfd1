"""
search command.
"""
import argparse
import logging

from spincodes.core.config import get_settings
from spincodes.core.exceptions import SearchExhaustedError
from spincodes.features.bindihedral import Irrep
from spincodes.features.dickemap import LABELINGS, SWAPPED, to_document
from spincodes.models.schemas import SearchConfig
from spincodes.utils.helpers import write_output
from .search_service import code_search_service, not_found_report

logger = logging.getLogger(__name__)


def cmd_search(args: argparse.Namespace) -> int:
    """
    Search (BD_2b, delta_a) at distance d.

    Returns:
        0 with the code JSON, or 3 with a not-found report
    """
    settings = get_settings()
    cfg = SearchConfig.from_settings(
        restarts=args.restarts,
        rng_seed=args.seed,
        tolerance=args.tol,
        max_workers=args.workers,
    )
    escalate = args.escalate if args.escalate is not None else settings.escalate
    rep = Irrep(args.b, args.a)

    try:
        result = code_search_service.search_code(
            rep, args.d, cfg, escalate=escalate, allow_conjectured=args.allow_conjectured
        )
    except SearchExhaustedError as e:
        logger.error(f"✗ {e.message}")
        write_output(not_found_report(e).model_dump_json(indent=2), args.output)
        return 3

    document = to_document(
        result.code,
        labeling=args.labeling,
        residuals={
            "objective": result.solution.residual,
            "kl_max": result.verification.max_residual,
        },
        conjectured=args.d >= settings.conjectured_min_distance,
    )
    write_output(document.model_dump_json(indent=2), args.output)
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("search", help="Numerically search a covariant code")
    parser.add_argument("--b", type=int, required=True)
    parser.add_argument("--a", type=int, required=True)
    parser.add_argument("--d", type=int, required=True)
    parser.add_argument("--restarts", type=int, default=None)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--tol", type=float, default=None)
    parser.add_argument("--workers", type=int, default=None, help="Restart thread pool size")
    parser.add_argument("--escalate", type=int, default=None, help="Extra spins to try after a not-found")
    parser.add_argument("--allow-conjectured", action="store_true")
    parser.add_argument("--labeling", choices=LABELINGS, default=SWAPPED)
    parser.add_argument("--output", default=None, help="Write JSON here instead of stdout")
    parser.set_defaults(handler=cmd_search)
