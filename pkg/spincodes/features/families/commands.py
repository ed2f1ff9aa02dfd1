"""
family and atlas commands.
"""
from typing import Optional, Tuple
import argparse
import json
import logging

from spincodes.core.config import get_settings
from spincodes.core.exceptions import InvalidInputError
from spincodes.features.angular.halfint import HalfInt
from spincodes.features.bindihedral import Irrep
from spincodes.features.dickemap import LABELINGS, SWAPPED, MultiqubitCode, bootstrap, to_document
from spincodes.features.klengine import kl_check_full
from spincodes.models.schemas import SearchConfig
from spincodes.utils.helpers import write_output
from .atlas_service import atlas_service
from .constructions import code1, code2, code3, family_d3

logger = logging.getLogger(__name__)

FAMILIES = ("1", "2", "3", "d3")
FORMATS = ("csv", "md", "json")


def _require(value: Optional[int], flag: str, family: str) -> int:
    if value is None:
        raise InvalidInputError(f"Family {family} needs {flag}")
    return value


def build_family(args: argparse.Namespace) -> Tuple[MultiqubitCode, Optional[float]]:
    """(code, search objective or None) for the requested family."""
    family = args.family
    if family == "1":
        return code1(_require(args.b, "--b", family)), None
    if family == "2":
        return code2(_require(args.r, "--r", family)), None
    if family == "3":
        cfg = SearchConfig.from_settings(restarts=args.restarts, rng_seed=args.seed)
        escalate = args.escalate if args.escalate is not None else get_settings().escalate
        return code3(
            _require(args.d, "--d", family), cfg, allow_conjectured=args.allow_conjectured, escalate=escalate
        )

    rep = Irrep(_require(args.b, "--b", family), _require(args.a, "--a", family))
    j = HalfInt.parse(args.j) if args.j else HalfInt(4 * rep.b - rep.two_s)
    return bootstrap(family_d3(rep, j), d=3), None


def cmd_family(args: argparse.Namespace) -> int:
    code, objective = build_family(args)
    verification = kl_check_full(code.spin_code(), code.d, get_settings().verify_tolerance)
    residuals = {"kl_max": verification.max_residual}
    if objective is not None:
        residuals["objective"] = objective

    document = to_document(
        code,
        labeling=args.labeling,
        residuals=residuals,
        conjectured=code.d >= get_settings().conjectured_min_distance,
    )
    write_output(document.model_dump_json(indent=2), args.output)
    return 0


def cmd_atlas(args: argparse.Namespace) -> int:
    cells = atlas_service.atlas(args.bmax, args.dmax)
    if args.format == "csv":
        text = atlas_service.to_csv(cells)
    elif args.format == "md":
        text = atlas_service.to_markdown(cells)
    else:
        text = json.dumps([cell.model_dump() for cell in cells], indent=2)
    write_output(text, args.output)
    return 0


def register(subparsers) -> None:
    family = subparsers.add_parser("family", help="Emit a closed-form (or Code 3) code as JSON")
    family.add_argument("--family", choices=FAMILIES, required=True)
    family.add_argument("--b", type=int, default=None, help="Group parameter (families 1, d3)")
    family.add_argument("--a", type=int, default=None, help="Irrep index (family d3)")
    family.add_argument("--j", default=None, help="Spin, e.g. 13/2 (family d3; default: smallest allowed)")
    family.add_argument("--r", type=int, default=None, help="Level of Q^(r) (family 2)")
    family.add_argument("--d", type=int, default=None, help="Distance (family 3)")
    family.add_argument("--seed", type=int, default=None)
    family.add_argument("--restarts", type=int, default=None)
    family.add_argument("--escalate", type=int, default=None, help="Extra spins to try after a not-found (family 3)")
    family.add_argument("--allow-conjectured", action="store_true")
    family.add_argument("--labeling", choices=LABELINGS, default=SWAPPED)
    family.add_argument("--output", default=None, help="Write JSON here instead of stdout")
    family.set_defaults(handler=cmd_family)

    atlas = subparsers.add_parser("atlas", help="Predicted code lengths over BD_2b, delta_a and d")
    atlas.add_argument("--bmax", type=int, required=True)
    atlas.add_argument("--dmax", type=int, required=True)
    atlas.add_argument("--format", choices=FORMATS, default="csv")
    atlas.add_argument("--output", default=None, help="Write the table here instead of stdout")
    atlas.set_defaults(handler=cmd_atlas)
