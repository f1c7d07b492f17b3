import random

import pytest

from symdet.matrix import SymMatrix, gen_one_homogeneous, gen_sparse_linear
from symdet.models.schema import ExperimentConfig
from symdet.poly import Polynomial, parse_polynomial


def P(text: str) -> Polynomial:
    return parse_polynomial(text)


def matrix_of(rows, s: int) -> SymMatrix:
    return SymMatrix([[parse_polynomial(t, s) for t in row] for row in rows], s)


def random_matrices(count: int, seed: int = 0, n_max: int = 6, s_max: int = 5):
    """Mixed sample from both distributions, reproducible per seed."""
    rng = random.Random(seed)
    out = []
    for k in range(count):
        n = rng.randint(1, n_max)
        s = rng.randint(1, s_max)
        if k % 2 == 0:
            out.append(gen_one_homogeneous(n, s, -9, 9, seed=rng.randrange(2 ** 32)))
        else:
            config = ExperimentConfig(
                n=n,
                s=s,
                zero_prob=rng.choice([0.0, 0.3, 0.6]),
                max_terms=min(3, s + 1),
                coeff_lo=-9,
                coeff_hi=9,
                seed=rng.randrange(2 ** 32),
            )
            out.append(gen_sparse_linear(config))
    return out


@pytest.fixture
def two_by_two() -> SymMatrix:
    return matrix_of([["x1", "x2"], ["x3", "x4"]], 4)


@pytest.fixture
def matrix_file(tmp_path, two_by_two):
    from symdet.matrix import dump_matrix

    path = tmp_path / "m.txt"
    dump_matrix(two_by_two, path)
    return path
