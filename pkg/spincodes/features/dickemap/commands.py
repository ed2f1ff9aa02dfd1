"""
verify and gates commands.
"""
from typing import Optional
import argparse
import logging

from pydantic import ValidationError

from spincodes.core.config import get_settings
from spincodes.features.klengine import kl_check_full
from spincodes.utils.helpers import write_output
from .multiqubit import MultiqubitCode
from .serialization import from_document, load_document
from .transversal import certify_group
from .verifier import DENSE, SYMMETRIC, multiqubit_kl_check

logger = logging.getLogger(__name__)

SPIN = "spin"
VERIFY_MODES = (SPIN, DENSE, SYMMETRIC)


def _load_code(path: str) -> Optional[MultiqubitCode]:
    """Code from a JSON document, or None (logged) when the file is unreadable or malformed."""
    try:
        return from_document(load_document(path))
    except OSError as e:
        logger.error(f"✗ Cannot read {path}: {e}")
    except ValidationError as e:
        logger.error(f"✗ {path} is not a code document: {e.error_count()} invalid field(s)")
    return None


def cmd_verify(args: argparse.Namespace) -> int:
    """
    Re-check a code JSON against the KL conditions.

    Returns:
        0 on pass, 4 on fail, 2 on an unreadable input
    """
    code = _load_code(args.input)
    if code is None:
        return 2
    d = args.d if args.d is not None else code.d
    tol = args.tol if args.tol is not None else get_settings().tolerance

    if args.mode == SPIN:
        report = kl_check_full(code.spin_code(), d, tol)
    else:
        report = multiqubit_kl_check(code, d, mode=args.mode, tol=tol)

    write_output(report.to_json(), args.output)
    if not report.passed:
        logger.error(f"✗ {code} fails the {args.mode} KL check at d={d} (max residual {report.max_residual:.3e})")
        return 4
    return 0


def cmd_gates(args: argparse.Namespace) -> int:
    """
    Logical action of each checked element plus the closure certificate.

    Returns:
        0 when certified, 4 otherwise, 2 on an unreadable input
    """
    code = _load_code(args.input)
    if code is None:
        return 2
    tol = args.tol if args.tol is not None else get_settings().tolerance
    certificate = certify_group(code, all_elements=args.all_generators, tol=tol)
    write_output(certificate.model_dump_json(indent=2), args.output)
    return 0 if certificate.certified else 4


def register(subparsers) -> None:
    verify = subparsers.add_parser("verify", help="Verify a code JSON against the KL conditions")
    verify.add_argument("--input", required=True, help="Code JSON")
    verify.add_argument("--d", type=int, default=None, help="Distance (default: the document's)")
    verify.add_argument("--mode", choices=VERIFY_MODES, default=SYMMETRIC)
    verify.add_argument("--tol", type=float, default=None)
    verify.add_argument("--output", default=None, help="Write JSON here instead of stdout")
    verify.set_defaults(handler=cmd_verify)

    gates = subparsers.add_parser("gates", help="Certify the transversal group of a code JSON")
    gates.add_argument("--input", required=True, help="Code JSON")
    gates.add_argument(
        "--all-generators",
        action="store_true",
        help="Certify every group element instead of X, Z and Ph(pi/b)",
    )
    gates.add_argument("--tol", type=float, default=None)
    gates.add_argument("--output", default=None, help="Write JSON here instead of stdout")
    gates.set_defaults(handler=cmd_gates)
