import itertools

import pytest

from conftest import P, matrix_of, random_matrices
from symdet.core.errors import IndexOutOfRange, SizeGuardExceeded
from symdet.costmodel import c_m_exact
from symdet.det import CostMeter, minor_expansion, naive_laplace
from symdet.matrix import SymMatrix, gen_sparse_linear
from symdet.models.schema import ExperimentConfig
from symdet.rowsort import (
    DEFAULT_STRATEGY,
    Direction,
    RowPermutation,
    SortKey,
    SortStrategy,
    entry_statistic,
    optimal_row_order,
    parse_strategies,
    row_key,
    row_keys,
    sort_rows,
    sorted_minor_expansion,
)

ALL_STRATEGIES = [SortStrategy(k, d) for k in SortKey for d in Direction]

DENSE = "x1 + x2 + x3 + 1"


def dense_row_matrix(dense_first: bool):
    sparse = [
        ["0", "x1", "0", "0"],
        ["0", "0", "x1", "0"],
        ["0", "0", "0", "x1"],
    ]
    dense = [DENSE] * 4
    rows = [dense] + sparse if dense_first else sparse + [dense]
    return matrix_of(rows, 3)


class TestRowKeys:
    @pytest.mark.parametrize(
        "key,expected",
        [
            (SortKey.SUM_TERMS, 3),
            (SortKey.SUM_SQUARED_TERMS, 5),
            (SortKey.NONZERO_COUNT, 2),
            (SortKey.DISTINCT_MONOMIALS, 2),
        ],
    )
    def test_mixed_row(self, key, expected):
        a = matrix_of([["0", "x1", "x1 + x2"], ["1", "1", "1"], ["1", "1", "1"]], 2)
        assert row_key(a, 1, key) == expected

    def test_zero_row(self):
        a = matrix_of([["0", "0"], ["x1", "1"]], 1)
        assert all(row_key(a, 1, key) == 0 for key in SortKey)

    def test_identical_single_terms(self):
        a = matrix_of([["x1", "x1", "x1"], ["1", "1", "1"], ["1", "1", "1"]], 1)
        assert row_key(a, 1, SortKey.DISTINCT_MONOMIALS) == 1
        assert row_key(a, 1, SortKey.SUM_TERMS) == 3

    def test_keys_accept_cli_strings(self, two_by_two):
        assert row_keys(two_by_two, "nonzero") == [2, 2]

    def test_row_out_of_range(self, two_by_two):
        with pytest.raises(IndexOutOfRange):
            row_key(two_by_two, 3, SortKey.SUM_TERMS)

    def test_distinct_is_row_level(self):
        with pytest.raises(ValueError):
            entry_statistic(P("x1"), SortKey.DISTINCT_MONOMIALS)


class TestPermutation:
    @pytest.mark.parametrize(
        "order,sign",
        [((1, 2, 3), 1), ((2, 1, 3), -1), ((2, 3, 1), 1), ((3, 2, 1), -1), ((4, 3, 2, 1), 1)],
    )
    def test_sign(self, order, sign):
        assert RowPermutation(order).sign == sign

    def test_identity(self):
        assert RowPermutation.identity(3).order == (1, 2, 3)


class TestSortRows:
    def test_ascending_sum(self):
        a = matrix_of(
            [["x1", "x2", "x3"], ["x1", "0", "0"], ["x1", "x2", "0"]],
            3,
        )
        sorted_a, perm = sort_rows(a, SortStrategy(SortKey.SUM_TERMS, Direction.ASC))
        assert perm.order == (2, 3, 1)
        assert perm.sign == 1
        assert sorted_a.rows[0] == a.rows[1]

    def test_already_sorted_is_identity(self, two_by_two):
        sorted_a, perm = sort_rows(two_by_two)
        assert perm == RowPermutation.identity(2)
        assert sorted_a == two_by_two

    def test_ties_keep_original_order(self):
        a = matrix_of([["x1", "0"], ["0", "x1"]], 1)
        for strategy in ALL_STRATEGIES:
            assert sort_rows(a, strategy)[1].order == (1, 2)

    def test_sign_corrects_determinant(self):
        for a in random_matrices(30, seed=17, n_max=4):
            expected = naive_laplace(a)
            for strategy in ALL_STRATEGIES:
                sorted_a, perm = sort_rows(a, strategy)
                det = naive_laplace(sorted_a)
                assert (det if perm.sign == 1 else -det) == expected

    def test_default_strategy(self):
        assert DEFAULT_STRATEGY == SortStrategy(SortKey.SUM_TERMS, Direction.ASC)


class TestSortedMinorExpansion:
    def test_matches_unsorted(self):
        for k in range(100):
            config = ExperimentConfig(n=5, s=3, zero_prob=(k % 10) / 10, max_terms=3, seed=k)
            a = gen_sparse_linear(config)
            expected = minor_expansion(a)
            for strategy in ALL_STRATEGIES:
                assert sorted_minor_expansion(a, strategy) == expected

    def test_zero_matrix(self):
        a = gen_sparse_linear(ExperimentConfig(n=5, s=3, zero_prob=1.0, max_terms=2))
        assert sorted_minor_expansion(a).is_zero()

    def test_dense_row_last_is_cheaper(self):
        first, last = dense_row_matrix(True), dense_row_matrix(False)
        assert c_m_exact(last) <= c_m_exact(first)

        meter = CostMeter()
        det = sorted_minor_expansion(first, DEFAULT_STRATEGY, meter)
        assert det == minor_expansion(first)
        assert meter.modeled_int_ops == c_m_exact(last)
        assert meter.modeled_int_ops < c_m_exact(first)


class TestOptimalRowOrder:
    def test_one_by_one(self):
        perm, cost = optimal_row_order(matrix_of([["x1 + x2 + 3"]], 2))
        assert perm.order == (1,)
        assert cost == 3

    def test_identical_rows_give_identity(self):
        a = matrix_of([["x1", "x2 + 1", "2"]] * 3, 2)
        perm, _ = optimal_row_order(a)
        assert perm.order == (1, 2, 3)

    def test_matches_exhaustive_minimum(self):
        a = dense_row_matrix(True)
        _, cost = optimal_row_order(a)
        costs = [c_m_exact(RowPermutation(p).apply(a)) for p in itertools.permutations(range(1, 5))]
        assert cost == min(costs)

    def test_lower_bound_for_heuristics(self):
        for k in range(10):
            a = gen_sparse_linear(ExperimentConfig(n=4, s=3, zero_prob=0.4, max_terms=4, seed=k))
            _, best = optimal_row_order(a)
            for strategy in ALL_STRATEGIES:
                assert best <= c_m_exact(sort_rows(a, strategy)[0])

    def test_size_guard(self):
        with pytest.raises(SizeGuardExceeded):
            optimal_row_order(SymMatrix.zeros(7, 1))


class TestParseStrategies:
    def test_bare_key_means_both_directions(self):
        assert [s.label for s in parse_strategies("sum, nonzero:desc")] == [
            "sum:asc",
            "sum:desc",
            "nonzero:desc",
        ]

    def test_duplicates_collapse(self):
        assert len(parse_strategies("sum,sum:asc")) == 2

    @pytest.mark.parametrize("text", ["", "bogus", "sum:sideways", " , "])
    def test_rejects(self, text):
        with pytest.raises(ValueError):
            parse_strategies(text)

    def test_parse_single(self):
        assert SortStrategy.parse("sumsq") == SortStrategy(SortKey.SUM_SQUARED_TERMS, Direction.ASC)
