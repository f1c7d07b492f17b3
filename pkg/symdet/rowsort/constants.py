"""Row sort key and direction names, also used as CLI strings."""

from enum import Enum


class SortKey(str, Enum):
    SUM_TERMS = "sum"
    SUM_SQUARED_TERMS = "sumsq"
    NONZERO_COUNT = "nonzero"
    DISTINCT_MONOMIALS = "distinct"


class Direction(str, Enum):
    ASC = "asc"
    DESC = "desc"


# Sparsest rows first: heavy rows belong late in the expansion.
DEFAULT_KEY = SortKey.SUM_TERMS
DEFAULT_DIRECTION = Direction.ASC
