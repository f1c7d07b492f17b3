"""
Closed-form cost model for dense 1-homogeneous matrices.

Costs are in integer operations: multiplying or dividing p by q costs
nterms(p) * nterms(q), additions are free. All sums are exact integers.
"""

from __future__ import annotations

from math import comb
from typing import List, Optional, Sequence, Tuple

from symdet.models.schema import CostParams
from symdet.poly import ONE_POLY, Polynomial, mul


def c_m(params: CostParams) -> int:
    """Minor expansion: s * sum_{i=2..n} i C(n,i) C(i+s-2, s-1)."""
    n, s = params.n, params.s
    return s * sum(i * comb(n, i) * comb(i + s - 2, s - 1) for i in range(2, n + 1))


def c_m_rewritten(params: CostParams) -> int:
    """The same cost written as n s sum_{i=1..n-1} C(n-1,i) C(i+s-1, s-1)."""
    n, s = params.n, params.s
    return n * s * sum(comb(n - 1, i) * comb(i + s - 1, s - 1) for i in range(1, n))


def c_g(params: CostParams) -> int:
    """Fraction-free elimination: two i-homogeneous products and one division per entry and step."""
    n, s = params.n, params.s
    total = 0
    for i in range(1, n):
        t_i = comb(i + s - 1, s - 1)
        total += (n - i) ** 2 * (2 * t_i * t_i + comb(2 * i + s - 1, s - 1) * comb(i + s - 2, s - 1))
    return total


def crossover_n(s: int, n_cap: int) -> Optional[int]:
    """Smallest n <= n_cap where minor expansion is modeled costlier, by linear scan."""
    for n in range(1, n_cap + 1):
        params = CostParams(n=n, s=s)
        if c_m(params) > c_g(params):
            return n
    return None


def predicted_boundary(s_max: int, n_cap: int) -> List[Tuple[int, Optional[int]]]:
    return [(s, crossover_n(s, n_cap)) for s in range(1, s_max + 1)]


def entry_multiplication_counts(n: int) -> List[int]:
    """
    Per row, how many products in minor expansion one of its entries enters
    directly. Row i >= 2 multiplies into every J containing its column at
    level i, C(n-1, i-1) of them. First-row entries are never multiplied as
    entries, but each one is the level-1 minor for n-1 products at level 2.
    """
    if n < 1:
        return []
    counts = [n - 1]
    counts.extend(comb(n - 1, i - 1) for i in range(2, n + 1))
    return counts


def product_chain_cost(polys: Sequence[Polynomial]) -> Tuple[Polynomial, int]:
    """
    Multiply left to right, charging nterms(prefix) * nterms(next) each time.

    The total depends on the order: the more like terms the early products
    consolidate, the cheaper the later ones.
    """
    acc = ONE_POLY
    cost = 0
    for idx, p in enumerate(polys):
        if idx:
            cost += acc.nterms() * p.nterms()
        acc = mul(acc, p)
    return acc, cost
