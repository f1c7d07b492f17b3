"""log(C_M / C_G) over a dense (n, s) grid."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List

from symdet.core.config import RATIO_GRID_N_MAX, RATIO_GRID_S_MAX
from symdet.core.errors import InvalidRange
from symdet.costmodel.formulas import c_g, c_m
from symdet.models.schema import CostParams, RatioPoint


def log_ratio(params: CostParams) -> float:
    ratio = Fraction(c_m(params), c_g(params))
    # the ints can exceed float range; only the logarithm is inexact
    return math.log(ratio.numerator) - math.log(ratio.denominator)


def cost_ratio_grid(n_max: int = RATIO_GRID_N_MAX, s_max: int = RATIO_GRID_S_MAX) -> List[RatioPoint]:
    """Rows for 2 <= n <= n_max and 1 <= s <= s_max, n-major."""
    if n_max < 2 or s_max < 1:
        raise InvalidRange(f"grid needs n_max >= 2 and s_max >= 1, got {n_max}, {s_max}")
    return [
        RatioPoint(n=n, s=s, log_ratio=log_ratio(CostParams(n=n, s=s)))
        for n in range(2, n_max + 1)
        for s in range(1, s_max + 1)
    ]
