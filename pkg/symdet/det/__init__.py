"""
Determinant algorithms and their cost accounting.

Public API:
  - naive_laplace / minor_expansion / bareiss / det_dispatch, Algorithm
  - CostMeter
  - MinorTable / iter_minor_levels / column_mask
  - BareissState
"""

from symdet.det.algorithms import (
    Algorithm,
    BareissState,
    bareiss,
    det_dispatch,
    minor_expansion,
    naive_laplace,
)
from symdet.det.meter import CostMeter
from symdet.det.minor_table import MinorTable, column_mask, iter_minor_levels

__all__ = [
    "Algorithm",
    "BareissState",
    "CostMeter",
    "MinorTable",
    "bareiss",
    "column_mask",
    "det_dispatch",
    "iter_minor_levels",
    "minor_expansion",
    "naive_laplace",
]
