"""Exact modeled cost of minor expansion on a concrete matrix."""

from __future__ import annotations

import logging

from symdet.core.config import MINOR_SIZE_GUARD
from symdet.core.errors import SizeGuardExceeded
from symdet.det import MinorTable
from symdet.matrix import SymMatrix

logger = logging.getLogger(__name__)


def c_m_exact(a: SymMatrix, size_guard: int = MINOR_SIZE_GUARD) -> int:
    """
    sum over J and j in J of nterms(a_{|J| j}) * nterms(det A[[|J|-1], J - {j}]).

    The minors come from the same rolling table minor expansion uses, so the
    result agrees with a CostMeter attached to ``minor_expansion`` (level-1
    products by the empty minor 1 included). Each (J, j) pair is visited as
    K = J - {j} at the previous level plus a column j outside K.
    """
    if a.n > size_guard:
        raise SizeGuardExceeded("c_m_exact", a.n, size_guard)
    total = 0
    table = MinorTable(a.n)
    for row in a.rows:
        row_terms = [p.nterms() for p in row]
        for k_mask, minor in table.values.items():
            free = sum(t for j, t in enumerate(row_terms) if not (k_mask >> j) & 1)
            total += minor.nterms() * free
        table.advance(row)
    logger.debug("c_m_exact n=%s s=%s -> %s", a.n, a.s, total)
    return total
