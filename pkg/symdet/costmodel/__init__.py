"""
Cost model: closed forms, exact per-matrix cost, ratio grid.

Public API:
  - c_m / c_m_rewritten / c_g / crossover_n / predicted_boundary
  - c_m_exact
  - cost_ratio_grid / log_ratio
  - entry_multiplication_counts / product_chain_cost
"""

from symdet.costmodel.exact import c_m_exact
from symdet.costmodel.formulas import (
    c_g,
    c_m,
    c_m_rewritten,
    crossover_n,
    entry_multiplication_counts,
    predicted_boundary,
    product_chain_cost,
)
from symdet.costmodel.grid import cost_ratio_grid, log_ratio
from symdet.models.schema import CostParams

__all__ = [
    "CostParams",
    "c_g",
    "c_m",
    "c_m_exact",
    "c_m_rewritten",
    "cost_ratio_grid",
    "crossover_n",
    "entry_multiplication_counts",
    "log_ratio",
    "predicted_boundary",
    "product_chain_cost",
]
