"""
Exact determinants: naive Laplace expansion, minor expansion and one-step
fraction-free (Bareiss) elimination. All three return the same canonical
polynomial; an optional CostMeter records the modeled work.
"""

from __future__ import annotations

import logging
from enum import Enum
from typing import List, Optional, Tuple

from symdet.core.config import NAIVE_SIZE_GUARD
from symdet.core.errors import DivisionNotExact, SizeGuardExceeded
from symdet.det.meter import CostMeter
from symdet.det.minor_table import iter_minor_levels
from symdet.matrix import SymMatrix
from symdet.poly import ONE_POLY, ZERO, Polynomial, div_exact, mul

logger = logging.getLogger(__name__)


class Algorithm(str, Enum):
    NAIVE = "naive"
    MINOR = "minor"
    BAREISS = "bareiss"


def naive_laplace(a: SymMatrix, meter: Optional[CostMeter] = None) -> Polynomial:
    """Cofactor expansion along the first row, recursively. Test oracle; n <= 7 in practice."""
    multiply = meter.mul if meter is not None else mul
    rows = a.rows

    def expand(r: int, cols: Tuple[int, ...]) -> Polynomial:
        if len(cols) == 1:
            return rows[r][cols[0]]
        total = ZERO
        for pos, j in enumerate(cols):
            entry = rows[r][j]
            if entry.is_zero():
                continue
            rest = expand(r + 1, cols[:pos] + cols[pos + 1:])
            if rest.is_zero():
                continue
            term = multiply(entry, rest)
            total = total + term if pos % 2 == 0 else total - term
        return total

    if a.n == 0:
        return ONE_POLY
    return expand(0, tuple(range(a.n)))


def minor_expansion(a: SymMatrix, meter: Optional[CostMeter] = None) -> Polynomial:
    if a.n == 0:
        return ONE_POLY
    table = None
    for table in iter_minor_levels(a, meter):
        pass
    return table.values.get((1 << a.n) - 1, ZERO)


class BareissState:
    """
    Working state of one-step fraction-free elimination.

    After ``k`` completed steps, rows[i][j] for i, j >= k is the (k+1)x(k+1)
    minor of A on rows/columns {1..k, i+1} x {1..k, j+1} (up to the row
    swaps recorded in ``sign``). ``prev_pivot`` starts at 1.
    """

    def __init__(self, a: SymMatrix, meter: Optional[CostMeter] = None):
        self.n = a.n
        self.rows: List[List[Polynomial]] = [list(r) for r in a.rows]
        self.k = 0
        self.prev_pivot = ONE_POLY
        self.sign = 1
        self.singular = False
        self._mul = meter.mul if meter is not None else mul
        self._div = meter.div if meter is not None else div_exact

    @property
    def done(self) -> bool:
        return self.singular or self.k >= self.n - 1

    def _find_pivot(self) -> bool:
        k, rows = self.k, self.rows
        if not rows[k][k].is_zero():
            return True
        for r in range(k + 1, self.n):
            if not rows[r][k].is_zero():
                rows[k], rows[r] = rows[r], rows[k]
                self.sign = -self.sign
                return True
        return False

    def step(self) -> None:
        if not self._find_pivot():
            self.singular = True
            return
        k, rows = self.k, self.rows
        pivot = rows[k][k]
        prev = self.prev_pivot
        for i in range(k + 1, self.n):
            row_i, a_ik = rows[i], rows[i][k]
            for j in range(k + 1, self.n):
                num = self._mul(pivot, row_i[j]) - self._mul(a_ik, rows[k][j])
                try:
                    row_i[j] = self._div(num, prev)
                except DivisionNotExact:
                    logger.error("Bareiss step %s: inexact division at (%s, %s)", k + 1, i + 1, j + 1)
                    raise
            row_i[k] = ZERO
        self.prev_pivot = pivot
        self.k += 1

    def determinant(self) -> Polynomial:
        while not self.done:
            self.step()
        if self.singular or self.n == 0:
            return ZERO if self.singular else ONE_POLY
        last = self.rows[self.n - 1][self.n - 1]
        return last if self.sign == 1 else -last


def bareiss(a: SymMatrix, meter: Optional[CostMeter] = None) -> Polynomial:
    return BareissState(a, meter).determinant()


def det_dispatch(
    a: SymMatrix,
    algorithm: Algorithm = Algorithm.MINOR,
    meter: Optional[CostMeter] = None,
    naive_guard: int = NAIVE_SIZE_GUARD,
) -> Polynomial:
    algorithm = Algorithm(algorithm)
    if algorithm is Algorithm.NAIVE:
        if a.n > naive_guard:
            raise SizeGuardExceeded("naive_laplace", a.n, naive_guard)
        return naive_laplace(a, meter)
    if algorithm is Algorithm.MINOR:
        return minor_expansion(a, meter)
    return bareiss(a, meter)

