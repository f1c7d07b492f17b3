"""Square matrices of polynomials in s variables."""

from __future__ import annotations

from typing import Iterable, Sequence, Tuple

from symdet.core.errors import DimensionMismatch, IndexOutOfRange, VariableOutOfRange
from symdet.poly import ZERO, Polynomial

Row = Tuple[Polynomial, ...]


class SymMatrix:
    """
    Immutable n x n matrix of polynomials.

    ``rows`` is a plain 0-based tuple of tuples; the index arguments of the
    public helpers (``entry``, ``submatrix``, ``permute_rows``) are 1-based,
    as in the matrix notation a_ij.
    """

    __slots__ = ("n", "s", "_rows")

    def __init__(self, entries: Iterable[Iterable[Polynomial]], s: int):
        rows = tuple(tuple(r) for r in entries)
        n = len(rows)
        if s < 1:
            raise ValueError(f"variable count s must be positive, got {s}")
        for i, r in enumerate(rows, start=1):
            if len(r) != n:
                raise DimensionMismatch(f"row {i} has {len(r)} entries, expected {n}")
            for p in r:
                if p.max_variable() > s:
                    raise VariableOutOfRange(p.max_variable(), s)
        self.n = n
        self.s = s
        self._rows = rows

    @classmethod
    def from_ints(cls, rows: Sequence[Sequence[int]], s: int = 1) -> "SymMatrix":
        return cls([[Polynomial.constant(c) for c in r] for r in rows], s)

    @classmethod
    def zeros(cls, n: int, s: int) -> "SymMatrix":
        return cls([[ZERO] * n for _ in range(n)], s)

    @property
    def rows(self) -> Tuple[Row, ...]:
        return self._rows

    def entry(self, i: int, j: int) -> Polynomial:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexOutOfRange(f"entry ({i}, {j}) outside {self.n}x{self.n}")
        return self._rows[i - 1][j - 1]

    def is_zero(self) -> bool:
        return all(p.is_zero() for r in self._rows for p in r)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymMatrix):
            return NotImplemented
        return self.s == other.s and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.s, self._rows))

    def __repr__(self) -> str:
        body = "; ".join("[" + ", ".join(str(p) for p in r) + "]" for r in self._rows)
        return f"SymMatrix(n={self.n}, s={self.s}, [{body}])"


def _check_indices(indices: Sequence[int], n: int, what: str) -> None:
    for k in indices:
        if not 1 <= k <= n:
            raise IndexOutOfRange(f"{what} index {k} outside [1, {n}]")


def submatrix(a: SymMatrix, rows: Sequence[int], cols: Sequence[int]) -> SymMatrix:
    """A restricted to the given 1-based rows and columns, in the given order."""
    if len(rows) != len(cols):
        raise DimensionMismatch(f"{len(rows)} rows but {len(cols)} columns selected")
    _check_indices(rows, a.n, "row")
    _check_indices(cols, a.n, "column")
    return SymMatrix(
        [[a.rows[i - 1][j - 1] for j in cols] for i in rows],
        a.s,
    )


def transpose(a: SymMatrix) -> SymMatrix:
    return SymMatrix(zip(*a.rows), a.s) if a.n else a


def permute_rows(a: SymMatrix, order: Sequence[int]) -> SymMatrix:
    """Row r of the result is row order[r] of a (both 1-based)."""
    if sorted(order) != list(range(1, a.n + 1)):
        raise IndexOutOfRange(f"{list(order)} is not a permutation of [1, {a.n}]")
    return SymMatrix([a.rows[i - 1] for i in order], a.s)
