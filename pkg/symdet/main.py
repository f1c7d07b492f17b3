"""
symdet command line.

Every subcommand module exposes ``register(subparsers, parent)`` and wires a
``handler`` that takes a :class:`CliConfig` and returns an exit code.
"""

from __future__ import annotations

import logging
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from symdet.cli import benchmarks, costs, determinant, generate
from symdet.cli.common import CliArgumentParser, CliConfig, UsageError, common_parent
from symdet.core.errors import SymdetError
from symdet.core.log import configure_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2

COMMANDS = (generate, determinant, costs, benchmarks)


def build_parser() -> CliArgumentParser:
    parser = CliArgumentParser(
        prog="symdet",
        description="Exact determinants of matrices with multivariate integer polynomial entries.",
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    parent = common_parent()
    for module in COMMANDS:
        module.register(subparsers, parent)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        # --help and --version
        return int(e.code or 0)

    configure_logging(args.log_level)
    cfg = CliConfig(command=args.command, seed=args.seed, output=args.output, args=args)
    try:
        return args.handler(cfg)
    except (UsageError, ValidationError) as e:
        print(f"symdet {cfg.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (SymdetError, OSError) as e:
        logger.error("%s failed: %s", cfg.command, e)
        print(f"symdet {cfg.command}: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_FAILURE


def main() -> None:
    sys.exit(run())
