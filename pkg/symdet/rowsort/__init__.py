"""
Row reordering for minor expansion.

Public API:
  - SortKey / Direction / SortStrategy / DEFAULT_STRATEGY / parse_strategies
  - RowPermutation
  - entry_statistic / row_key / row_keys / sort_rows / sorted_minor_expansion
  - optimal_row_order (brute-force oracle, n <= 6)
"""

from symdet.rowsort.constants import Direction, SortKey
from symdet.rowsort.oracle import optimal_row_order
from symdet.rowsort.strategies import (
    DEFAULT_STRATEGY,
    RowPermutation,
    SortStrategy,
    entry_statistic,
    parse_strategies,
    row_key,
    row_keys,
    sort_rows,
    sorted_minor_expansion,
)

__all__ = [
    "DEFAULT_STRATEGY",
    "Direction",
    "RowPermutation",
    "SortKey",
    "SortStrategy",
    "entry_statistic",
    "optimal_row_order",
    "parse_strategies",
    "row_key",
    "row_keys",
    "sort_rows",
    "sorted_minor_expansion",
]
