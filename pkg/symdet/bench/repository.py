"""Persistence for benchmark tables (CSV)."""

from __future__ import annotations

import logging
import os
import tempfile
from pathlib import Path
from typing import List, Sequence, Type, TypeVar, Union

import pandas as pd
from pydantic import BaseModel

from symdet.core.errors import BenchIoError

logger = logging.getLogger(__name__)

M = TypeVar("M", bound=BaseModel)


def render_csv(records: Sequence[BaseModel], columns: Sequence[str]) -> str:
    """Header plus one line per record, '\\n'-terminated, minimal RFC-4180 quoting."""
    frame = pd.DataFrame([r.dict() for r in records], columns=list(columns))
    return frame.to_csv(index=False, lineterminator="\n")


def write_csv(records: Sequence[BaseModel], path: Union[str, Path], columns: Sequence[str]) -> None:
    """Write atomically: a temp file in the target directory, then rename over the target."""
    path = Path(path)
    text = render_csv(records, columns)
    tmp_name = None
    try:
        with tempfile.NamedTemporaryFile(
            "w",
            encoding="utf-8",
            newline="",
            dir=path.parent,
            prefix=f".{path.name}.",
            suffix=".tmp",
            delete=False,
        ) as tmp:
            tmp_name = tmp.name
            tmp.write(text)
        os.replace(tmp_name, path)
    except OSError as e:
        if tmp_name and os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise BenchIoError(f"cannot write {path}: {e}") from e
    logger.info("Wrote %s rows to %s", len(records), path)


def read_csv(path: Union[str, Path], model: Type[M]) -> List[M]:
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False)
    except OSError as e:
        raise BenchIoError(f"cannot read {path}: {e}") from e
    return [model(**row) for row in frame.to_dict(orient="records")]
