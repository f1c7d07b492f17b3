"""
Matrix text files.

Line 1 holds ``n s``; the next n lines hold n polynomials each, separated
by ``;``. Blank lines and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import List, Union

from symdet.core.errors import MatrixFormatError, PolynomialSyntaxError, VariableOutOfRange
from symdet.matrix.sym_matrix import SymMatrix
from symdet.poly import Polynomial, parse_polynomial

_HEADER = re.compile(r"([0-9]+)[ \t]+([0-9]+)")


def read_matrix(text: str) -> SymMatrix:
    lines = [
        (no, raw.strip())
        for no, raw in enumerate(text.splitlines(), start=1)
        if raw.strip() and not raw.strip().startswith("#")
    ]
    if not lines:
        raise MatrixFormatError("missing 'n s' header")

    header_no, header = lines[0]
    m = _HEADER.fullmatch(header)
    if not m:
        raise MatrixFormatError(f"expected 'n s', got {header!r}", header_no)
    n, s = int(m.group(1)), int(m.group(2))
    if n < 1 or s < 1:
        raise MatrixFormatError("n and s must be positive", header_no)

    body = lines[1:]
    if len(body) != n:
        raise MatrixFormatError(f"expected {n} matrix rows, found {len(body)}")

    rows: List[List[Polynomial]] = []
    for no, line in body:
        cells = line.split(";")
        if len(cells) != n:
            raise MatrixFormatError(f"expected {n} entries, found {len(cells)}", no)
        try:
            rows.append([parse_polynomial(cell, s) for cell in cells])
        except (PolynomialSyntaxError, VariableOutOfRange) as e:
            raise MatrixFormatError(str(e), no) from e
    return SymMatrix(rows, s)


def format_matrix(a: SymMatrix) -> str:
    lines = [f"{a.n} {a.s}"]
    lines.extend("; ".join(str(p) for p in row) for row in a.rows)
    return "\n".join(lines) + "\n"


def load_matrix(path: Union[str, Path]) -> SymMatrix:
    return read_matrix(Path(path).read_text(encoding="utf-8"))


def dump_matrix(a: SymMatrix, path: Union[str, Path]) -> None:
    Path(path).write_text(format_matrix(a), encoding="utf-8")
