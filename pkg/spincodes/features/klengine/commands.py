"""
Condition-count command.
"""
import argparse
import logging

from spincodes.features.bindihedral import Irrep
from spincodes.models.schemas import CountReport
from spincodes.utils.helpers import write_output
from .conditions import count_conditions, count_conditions_closed

logger = logging.getLogger(__name__)


def count_report(rep: Irrep, d: int) -> CountReport:
    """Summation and closed-form counts side by side."""
    nu_on, nu_off = count_conditions(rep, d)
    nu_closed = count_conditions_closed(rep, d)
    return CountReport(
        b=rep.b,
        a=rep.a,
        d=d,
        nu_on=nu_on,
        nu_off=nu_off,
        nu=nu_on + nu_off,
        nu_closed=nu_closed,
        match=nu_on + nu_off == nu_closed,
    )


def cmd_count(args: argparse.Namespace) -> int:
    """
    Print (nu_on, nu_off, nu, closed-form nu, match).

    Returns:
        0 when both counts agree, 1 otherwise
    """
    report = count_report(Irrep(args.b, args.a), args.d)
    write_output(report.model_dump_json(indent=2), args.output)
    if not report.match:
        logger.error(f"✗ Summation nu={report.nu} differs from closed form {report.nu_closed}")
        return 1
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("count", help="Count the reduced KL conditions of (BD_2b, delta_a) at distance d")
    parser.add_argument("--b", type=int, required=True)
    parser.add_argument("--a", type=int, required=True)
    parser.add_argument("--d", type=int, required=True)
    parser.add_argument("--output", default=None, help="Write JSON here instead of stdout")
    parser.set_defaults(handler=cmd_count)
