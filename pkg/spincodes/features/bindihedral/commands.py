"""
branching command.
"""
import argparse
import json
import logging

import pandas as pd

from spincodes.features.angular.halfint import HalfInt
from spincodes.models.schemas import BranchingRow
from spincodes.utils.helpers import write_output
from .branching import branching_table

logger = logging.getLogger(__name__)

FORMATS = ("json", "csv", "md")


def branching_rows(b: int, j_max: HalfInt) -> list:
    return [
        BranchingRow(j=str(row["j"]), multiplicities=row["multiplicities"])
        for row in branching_table(b, j_max)
    ]


def branching_frame(b: int, rows: list) -> pd.DataFrame:
    """One row per spin, one column per delta_a."""
    return pd.DataFrame(
        [[row.j] + row.multiplicities for row in rows],
        columns=["j"] + [f"delta_{a}" for a in range(1, b + 1)],
    )


def cmd_branching(args: argparse.Namespace) -> int:
    rows = branching_rows(args.b, HalfInt.parse(args.jmax))
    if args.format == "json":
        text = json.dumps([row.model_dump() for row in rows], indent=2)
    else:
        frame = branching_frame(args.b, rows)
        if args.format == "csv":
            text = frame.to_csv(index=False)
        else:
            header = "| " + " | ".join(frame.columns) + " |"
            rule = "|" + "|".join("---" for _ in frame.columns) + "|"
            body = ["| " + " | ".join(str(value) for value in record) + " |" for record in frame.itertuples(index=False)]
            text = "\n".join([header, rule] + body) + "\n"
    write_output(text, args.output)
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("branching", help="Multiplicity of every delta_a of BD_2b in spin j")
    parser.add_argument("--b", type=int, required=True)
    parser.add_argument("--jmax", required=True, help="Largest spin, e.g. 31/2")
    parser.add_argument("--format", choices=FORMATS, default="json")
    parser.add_argument("--output", default=None, help="Write the table here instead of stdout")
    parser.set_defaults(handler=cmd_branching)
