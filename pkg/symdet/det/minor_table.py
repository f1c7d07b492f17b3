"""
Rolling storage for minor expansion.

At level i the table maps every column subset J with |J| = i (as a bitmask,
bit j-1 for column j) to det A[[i], J]. Only the current level is kept; the
next one is built from it and one row of A. Zero minors are not stored.
"""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, Optional, Sequence

from symdet.det.meter import CostMeter
from symdet.matrix import SymMatrix
from symdet.poly import ONE_POLY, ZERO, Polynomial, mul


def column_mask(cols: Iterable[int]) -> int:
    """Bitmask of 1-based column indices."""
    mask = 0
    for j in cols:
        mask |= 1 << (j - 1)
    return mask


class MinorTable:
    __slots__ = ("n", "level", "values")

    def __init__(self, n: int):
        self.n = n
        self.level = 0
        self.values: Dict[int, Polynomial] = {0: ONE_POLY}

    def minor(self, cols: Iterable[int]) -> Polynomial:
        return self.values.get(column_mask(cols), ZERO)

    def advance(self, row: Sequence[Polynomial], meter: Optional[CostMeter] = None) -> None:
        """
        Move from level i-1 to level i using row i of A.

        Each product a_ij * M_K with K = J \\ {j} is pushed into M_J with sign
        (-1)^(i+k), k being the 1-based position of j within J. Signs are
        applied by subtracting, never by multiplying.
        """
        i = self.level + 1
        multiply = meter.mul if meter is not None else mul
        nxt: Dict[int, Polynomial] = {}
        for k_mask, m in self.values.items():
            for j in range(self.n):
                bit = 1 << j
                if k_mask & bit:
                    continue
                a = row[j]
                if a.is_zero():
                    continue
                prod = multiply(a, m)
                pos = bin(k_mask & (bit - 1)).count("1") + 1
                j_mask = k_mask | bit
                cur = nxt.get(j_mask, ZERO)
                nxt[j_mask] = cur + prod if (i + pos) % 2 == 0 else cur - prod
        self.values = {mask: p for mask, p in nxt.items() if p}
        self.level = i


def iter_minor_levels(a: SymMatrix, meter: Optional[CostMeter] = None) -> Iterator[MinorTable]:
    """Yield the table after each level 1..n (the same object, advanced in place)."""
    table = MinorTable(a.n)
    for row in a.rows:
        table.advance(row, meter)
        yield table
