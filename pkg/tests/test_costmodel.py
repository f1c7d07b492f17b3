import math
from math import comb

import pytest

from conftest import P, random_matrices
from symdet.core.errors import InvalidRange, SizeGuardExceeded
from symdet.costmodel import (
    CostParams,
    c_g,
    c_m,
    c_m_exact,
    c_m_rewritten,
    cost_ratio_grid,
    crossover_n,
    entry_multiplication_counts,
    log_ratio,
    predicted_boundary,
    product_chain_cost,
)
from symdet.det import CostMeter, minor_expansion
from symdet.matrix import SymMatrix, gen_one_homogeneous, gen_sparse_linear
from symdet.models.schema import ExperimentConfig


def brute_c_m(n, s):
    total = 0
    for i in range(2, n + 1):
        total += i * comb(n, i) * comb(i + s - 2, s - 1)
    return s * total


def brute_c_g(n, s):
    total = 0
    for i in range(1, n):
        t = comb(i + s - 1, s - 1)
        total += (n - i) ** 2 * (2 * t * t + comb(2 * i + s - 1, s - 1) * comb(i + s - 2, s - 1))
    return total


class TestClosedForms:
    @pytest.mark.parametrize(
        "fn,n,s,expected",
        [
            (c_m, 2, 1, 2),
            (c_g, 2, 1, 3),
            (c_m, 3, 2, 42),
            (c_g, 3, 1, 15),
            (c_m, 5, 1, 75),
            (c_g, 5, 1, 90),
            (c_m, 6, 1, 186),
            (c_g, 6, 1, 165),
            (c_m, 1, 4, 0),
            (c_g, 1, 4, 0),
        ],
    )
    def test_values(self, fn, n, s, expected):
        assert fn(CostParams(n=n, s=s)) == expected

    def test_agree_with_direct_summation(self):
        for n in range(1, 12):
            for s in range(1, 8):
                params = CostParams(n=n, s=s)
                assert c_m(params) == brute_c_m(n, s)
                assert c_g(params) == brute_c_g(n, s)

    def test_rewritten_form_is_equal(self):
        for n in range(1, 20):
            for s in range(1, 20):
                params = CostParams(n=n, s=s)
                assert c_m_rewritten(params) == c_m(params)

    def test_strictly_increasing_in_n(self):
        for s in range(1, 10):
            cms = [c_m(CostParams(n=n, s=s)) for n in range(2, 16)]
            cgs = [c_g(CostParams(n=n, s=s)) for n in range(2, 16)]
            assert cms == sorted(set(cms))
            assert cgs == sorted(set(cgs))

    def test_params_validated(self):
        with pytest.raises(ValueError):
            CostParams(n=0, s=1)


class TestCrossover:
    def test_single_variable(self):
        assert crossover_n(1, 20) == 6

    def test_postcondition(self):
        for s in range(1, 5):
            n = crossover_n(s, 40)
            assert n is not None
            assert c_m(CostParams(n=n, s=s)) > c_g(CostParams(n=n, s=s))
            assert c_m(CostParams(n=n - 1, s=s)) <= c_g(CostParams(n=n - 1, s=s))

    def test_absent_below_cap(self):
        assert crossover_n(30, 5) is None

    def test_predicted_boundary(self):
        assert predicted_boundary(1, 20) == [(1, 6)]
        assert [s for s, _ in predicted_boundary(4, 30)] == [1, 2, 3, 4]


class TestRatioGrid:
    def test_dimensions_and_order(self):
        grid = cost_ratio_grid(5, 3)
        assert len(grid) == 4 * 3
        assert (grid[0].n, grid[0].s) == (2, 1)
        assert (grid[-1].n, grid[-1].s) == (5, 3)

    def test_first_entry(self):
        assert cost_ratio_grid(2, 1)[0].log_ratio == pytest.approx(math.log(2 / 3))

    def test_single_variable_sign_flip(self):
        for point in cost_ratio_grid(12, 1):
            assert (point.log_ratio > 0) == (point.n >= 6)

    def test_log_of_huge_values(self):
        value = log_ratio(CostParams(n=200, s=200))
        assert math.isfinite(value)

    def test_invalid_grid(self):
        with pytest.raises(InvalidRange):
            cost_ratio_grid(1, 3)


class TestExactCost:
    def test_two_by_two(self, two_by_two):
        assert c_m_exact(two_by_two) == 4

    def test_zero_matrix(self):
        assert c_m_exact(SymMatrix.zeros(3, 2)) == 0

    def test_equals_meter(self):
        for k in range(50):
            if k % 2:
                a = gen_one_homogeneous(5, 3, -20, 20, seed=k)
            else:
                a = gen_sparse_linear(ExperimentConfig(n=5, s=4, zero_prob=0.3, max_terms=3, seed=k))
            meter = CostMeter()
            minor_expansion(a, meter)
            assert c_m_exact(a) == meter.modeled_int_ops

    def test_equals_meter_on_mixed_sample(self):
        for a in random_matrices(40, seed=31):
            meter = CostMeter()
            minor_expansion(a, meter)
            assert c_m_exact(a) == meter.modeled_int_ops

    def test_bounded_by_closed_form(self):
        for n in range(1, 6):
            for s in range(1, 4):
                a = gen_one_homogeneous(n, s, seed=n * 7 + s)
                assert c_m_exact(a) <= c_m(CostParams(n=n, s=s)) + n * s

    def test_tight_for_generic_coefficients(self):
        a = gen_one_homogeneous(4, 3, seed=12)
        assert c_m_exact(a) == c_m(CostParams(n=4, s=3)) + 4 * 3

    def test_size_guard(self):
        with pytest.raises(SizeGuardExceeded):
            c_m_exact(SymMatrix.zeros(3, 1), size_guard=2)


class TestSupportingCounts:
    def test_entry_multiplication_counts(self):
        assert entry_multiplication_counts(1) == [0]
        assert entry_multiplication_counts(4) == [3, 3, 3, 1]

    def test_entry_counts_sum_to_product_count(self):
        for n in range(2, 10):
            counts = entry_multiplication_counts(n)
            assert n * sum(counts[1:]) == sum(i * comb(n, i) for i in range(2, n + 1))

    def test_product_chain_depends_on_order(self):
        a, b, c = P("x1 + 1"), P("x1 - 1"), P("x1^2 + 1")
        prod1, cost1 = product_chain_cost([a, b, c])
        prod2, cost2 = product_chain_cost([a, c, b])
        assert prod1 == prod2 == P("x1^4 - 1")
        assert (cost1, cost2) == (8, 12)
