import argparse
import logging
import sys
from typing import List, Optional

from spincodes.core.config import get_settings
from spincodes.core.exceptions import SpinCodesError
from spincodes.features.bindihedral import commands as branching
from spincodes.features.dickemap import commands as verification
from spincodes.features.families import commands as families
from spincodes.features.klengine import commands as counting
from spincodes.features.searcher import commands as search

logger = logging.getLogger(__name__)
settings = get_settings()


def configure_logging(level: str) -> None:
    # stdout carries the JSON/CSV/Markdown payloads
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spincodes",
        description=f"{settings.app_name} {settings.app_version}",
    )
    parser.add_argument("--log-level", default=settings.log_level)
    subparsers = parser.add_subparsers(dest="command", required=True)

    # Include commands
    counting.register(subparsers)
    families.register(subparsers)
    search.register(subparsers)
    verification.register(subparsers)
    branching.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)

    try:
        return args.handler(args)
    except SpinCodesError as e:
        logger.error(f"✗ {type(e).__name__}: {e.message}")
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
