"""Shared CLI plumbing: parser class, common flags, argument types, output."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from pydantic import BaseModel

from symdet.bench import render_csv, write_csv
from symdet.core.config import LOG_LEVEL
from symdet.models.schema import SEED_LIMIT

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


class UsageError(Exception):
    """Bad command line; reported with exit code 1."""
    pass


class CliArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage().strip()}")


@dataclass(frozen=True)
class CliConfig:
    """Parsed command line: the subcommand, the shared flags and its own flags."""

    command: str
    seed: int
    output: Optional[str]
    args: argparse.Namespace


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def seed_int(text: str) -> int:
    value = int(text)
    if not 0 <= value < SEED_LIMIT:
        raise argparse.ArgumentTypeError(f"seed must be a 64-bit unsigned integer, got {text}")
    return value


def probability(text: str) -> float:
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"expected a probability in [0, 1], got {text}")
    return value


def common_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--seed", type=seed_int, default=0, help="master random seed")
    parent.add_argument("--output", default=None, help="output file; stdout when omitted")
    parent.add_argument(
        "--log-level",
        type=str.upper,
        choices=LOG_LEVELS,
        default=LOG_LEVEL,
        help="log level for stderr logging",
    )
    return parent


def add_command(subparsers, name: str, parent: argparse.ArgumentParser, help_text: str) -> argparse.ArgumentParser:
    return subparsers.add_parser(
        name,
        parents=[parent],
        help=help_text,
        description=help_text,
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )


def emit_text(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def emit_csv(records: Sequence[BaseModel], columns: Sequence[str], output: Optional[str]) -> None:
    if output:
        write_csv(records, output, columns)
    else:
        sys.stdout.write(render_csv(records, columns))
