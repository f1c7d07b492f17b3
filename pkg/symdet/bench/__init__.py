"""
Benchmark harness: crossover staircase and sorting study.

Public API:
  - crossover_staircase / sorting_study
  - write_csv / render_csv / read_csv
  - CSV column lists (constants)
"""

from symdet.bench.constants import (
    BOUNDARY_COLUMNS,
    RATIO_COLUMNS,
    SORTING_COLUMNS,
    STAIRCASE_COLUMNS,
    TIMING_COLUMNS,
    TRIAL_COLUMNS,
)
from symdet.bench.crossover import crossover_staircase
from symdet.bench.repository import read_csv, render_csv, write_csv
from symdet.bench.sorting import cost_ratio, sorting_study

__all__ = [
    "BOUNDARY_COLUMNS",
    "RATIO_COLUMNS",
    "SORTING_COLUMNS",
    "STAIRCASE_COLUMNS",
    "TIMING_COLUMNS",
    "TRIAL_COLUMNS",
    "cost_ratio",
    "crossover_staircase",
    "read_csv",
    "render_csv",
    "sorting_study",
    "write_csv",
]
