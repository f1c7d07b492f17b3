"""Brute-force best row order for small matrices (test oracle only)."""

from __future__ import annotations

import itertools
import logging
from typing import Optional, Tuple

from symdet.core.config import ORACLE_SIZE_GUARD
from symdet.core.errors import SizeGuardExceeded
from symdet.costmodel import c_m_exact
from symdet.matrix import SymMatrix, permute_rows
from symdet.rowsort.strategies import RowPermutation

logger = logging.getLogger(__name__)


def optimal_row_order(a: SymMatrix, size_guard: int = ORACLE_SIZE_GUARD) -> Tuple[RowPermutation, int]:
    """
    Row permutation minimizing c_m_exact over all n! orders.

    Permutations are enumerated in lexicographic order and only a strictly
    cheaper one replaces the incumbent, so ties go to the lexicographically
    smallest.
    """
    if a.n > size_guard:
        raise SizeGuardExceeded("optimal_row_order", a.n, size_guard)
    best: Optional[Tuple[int, ...]] = None
    best_cost = 0
    for order in itertools.permutations(range(1, a.n + 1)):
        cost = c_m_exact(permute_rows(a, order))
        if best is None or cost < best_cost:
            best, best_cost = order, cost
    logger.debug("optimal_row_order n=%s -> %s cost=%s", a.n, best, best_cost)
    return RowPermutation(best), best_cost
