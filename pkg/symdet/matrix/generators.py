"""
Random matrix distributions used by the experiments.

Both generators draw from ``random.Random(seed)``: the same seed gives the
same matrix within one Python build. Coefficients are never zero, so the
term count of each generated entry is exactly what was drawn.
"""

from __future__ import annotations

import random

from symdet.core.config import COEFF_HI, COEFF_LO
from symdet.core.errors import InvalidRange
from symdet.matrix.sym_matrix import SymMatrix
from symdet.models.schema import ExperimentConfig
from symdet.poly import ZERO, Polynomial, variable
from symdet.poly.monomial import ONE


def _check_coeff_range(lo: int, hi: int) -> None:
    if lo > hi:
        raise InvalidRange(f"empty coefficient range [{lo}, {hi}]")
    if lo == hi == 0:
        raise InvalidRange("coefficient range [0, 0] has no nonzero value")


def _nonzero_coeff(rng: random.Random, lo: int, hi: int) -> int:
    while True:
        c = rng.randint(lo, hi)
        if c:
            return c


def gen_one_homogeneous(
    n: int,
    s: int,
    coeff_lo: int = COEFF_LO,
    coeff_hi: int = COEFF_HI,
    seed: int = 0,
) -> SymMatrix:
    """Dense matrix with a_ij = sum_k c_ijk x_k, every c_ijk nonzero."""
    if n < 1 or s < 1:
        raise InvalidRange(f"n and s must be positive, got n={n}, s={s}")
    _check_coeff_range(coeff_lo, coeff_hi)
    rng = random.Random(seed)
    monos = [variable(k) for k in range(1, s + 1)]
    rows = [
        [
            Polynomial([(m, _nonzero_coeff(rng, coeff_lo, coeff_hi)) for m in monos])
            for _ in range(n)
        ]
        for _ in range(n)
    ]
    return SymMatrix(rows, s)


def gen_sparse_linear(config: ExperimentConfig) -> SymMatrix:
    """
    Sparse matrix of total-degree <= 1 polynomials.

    Each entry is zero with probability ``zero_prob``; otherwise it has a
    uniform number of terms in 1..max_terms, its monomials drawn without
    replacement from {1, x1, ..., xs}.
    """
    if config.max_terms > config.s + 1:
        raise InvalidRange(
            f"max_terms={config.max_terms} exceeds the {config.s + 1} monomials of degree <= 1"
        )
    _check_coeff_range(config.coeff_lo, config.coeff_hi)
    rng = random.Random(config.seed)
    pool = [ONE] + [variable(k) for k in range(1, config.s + 1)]

    def entry() -> Polynomial:
        if rng.random() < config.zero_prob:
            return ZERO
        k = rng.randint(1, config.max_terms)
        return Polynomial(
            [(m, _nonzero_coeff(rng, config.coeff_lo, config.coeff_hi)) for m in rng.sample(pool, k)]
        )

    return SymMatrix([[entry() for _ in range(config.n)] for _ in range(config.n)], config.s)
