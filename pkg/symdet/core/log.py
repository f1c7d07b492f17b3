"""Logging setup shared by the CLI and the benchmark harness."""

from __future__ import annotations

import logging
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler

from symdet.core.config import LOG_LEVEL

_configured = False


def configure_logging(level: Optional[str] = None) -> None:
    """
    Route all records through a rich handler on stderr.

    stdout carries determinants and CSV tables, so nothing logged may land
    there. Safe to call more than once; only the first call installs the
    handler, later calls just adjust the level.
    """
    global _configured
    root = logging.getLogger()
    root.setLevel((level or LOG_LEVEL).upper())
    if _configured:
        return
    handler = RichHandler(
        console=Console(stderr=True),
        show_path=False,
        rich_tracebacks=True,
    )
    handler.setFormatter(logging.Formatter("%(message)s", datefmt="[%X]"))
    root.addHandler(handler)
    _configured = True
