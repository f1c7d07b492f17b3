"""
Row cost-contribution heuristics.

A row's key is computed from its own entries only (one visit per entry), so
sorting a matrix costs O(n^2) entry statistics plus an O(n log n) sort.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from symdet.core.errors import IndexOutOfRange
from symdet.det import CostMeter, minor_expansion
from symdet.matrix import SymMatrix, permute_rows
from symdet.poly import Polynomial
from symdet.rowsort.constants import DEFAULT_DIRECTION, DEFAULT_KEY, Direction, SortKey


@dataclass(frozen=True)
class SortStrategy:
    key: SortKey = DEFAULT_KEY
    direction: Direction = DEFAULT_DIRECTION

    @property
    def label(self) -> str:
        return f"{self.key.value}:{self.direction.value}"

    @classmethod
    def parse(cls, text: str) -> "SortStrategy":
        key, _, direction = text.partition(":")
        return cls(SortKey(key.strip()), Direction(direction.strip() or DEFAULT_DIRECTION.value))


DEFAULT_STRATEGY = SortStrategy()


def parse_strategies(text: str) -> List[SortStrategy]:
    """
    Comma-separated ``key`` or ``key:direction`` items; a bare key means both
    directions. Raises ValueError on unknown names or an empty list.
    """
    out: List[SortStrategy] = []
    for item in (t.strip() for t in text.split(",")):
        if not item:
            continue
        if ":" in item:
            candidates = [SortStrategy.parse(item)]
        else:
            candidates = [SortStrategy(SortKey(item), d) for d in Direction]
        out.extend(c for c in candidates if c not in out)
    if not out:
        raise ValueError("no sort strategies given")
    return out


@dataclass(frozen=True)
class RowPermutation:
    """Row r of the permuted matrix is row order[r] of the original (1-based)."""

    order: Tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> "RowPermutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def sign(self) -> int:
        seen = [False] * len(self.order)
        transpositions = 0
        for start in range(len(self.order)):
            length = 0
            k = start
            while not seen[k]:
                seen[k] = True
                k = self.order[k] - 1
                length += 1
            if length:
                transpositions += length - 1
        return -1 if transpositions % 2 else 1

    def apply(self, a: SymMatrix) -> SymMatrix:
        return permute_rows(a, self.order)


def entry_statistic(p: Polynomial, key: SortKey) -> int:
    if key is SortKey.SUM_TERMS:
        return p.nterms()
    if key is SortKey.SUM_SQUARED_TERMS:
        return p.nterms() ** 2
    if key is SortKey.NONZERO_COUNT:
        return 0 if p.is_zero() else 1
    raise ValueError(f"{key.value} is a row-level key")


def _row_key(row: Sequence[Polynomial], key: SortKey) -> int:
    if key is SortKey.DISTINCT_MONOMIALS:
        return len({m for p in row for m in p.monomials()})
    return sum(entry_statistic(p, key) for p in row)


def row_key(a: SymMatrix, i: int, key: SortKey) -> int:
    if not 1 <= i <= a.n:
        raise IndexOutOfRange(f"row {i} outside [1, {a.n}]")
    return _row_key(a.rows[i - 1], SortKey(key))


def row_keys(a: SymMatrix, key: SortKey) -> List[int]:
    key = SortKey(key)
    return [_row_key(row, key) for row in a.rows]


def sort_rows(a: SymMatrix, strategy: SortStrategy = DEFAULT_STRATEGY) -> Tuple[SymMatrix, RowPermutation]:
    """Stable sort of the rows by key; equal keys keep their original order."""
    keys = row_keys(a, strategy.key)
    order = sorted(
        range(a.n),
        key=keys.__getitem__,
        reverse=strategy.direction is Direction.DESC,
    )
    perm = RowPermutation(tuple(i + 1 for i in order))
    return perm.apply(a), perm


def sorted_minor_expansion(
    a: SymMatrix,
    strategy: SortStrategy = DEFAULT_STRATEGY,
    meter: Optional[CostMeter] = None,
) -> Polynomial:
    """Minor expansion on the row-sorted matrix, sign-corrected back to det(a)."""
    sorted_a, perm = sort_rows(a, strategy)
    det = minor_expansion(sorted_a, meter)
    return det if perm.sign == 1 else -det
