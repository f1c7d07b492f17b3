import random

import pytest

from conftest import P
from symdet.core.errors import DivisionNotExact, VariableOutOfRange
from symdet.poly import (
    ONE_POLY,
    ZERO,
    Polynomial,
    div_exact,
    homogeneous_term_bound,
    is_homogeneous,
    monomial,
    nterms,
    variable,
)
from symdet.poly.monomial import mono_div, mono_mul, order_key


class TestMonomial:
    def test_trailing_zeros_stripped(self):
        assert monomial([1, 0, 0]) == (1,)
        assert monomial([0, 0]) == ()

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            monomial([1, -1])

    def test_variable(self):
        assert variable(3) == (0, 0, 1)
        with pytest.raises(VariableOutOfRange):
            variable(0)

    def test_mul_and_div(self):
        assert mono_mul((1,), (0, 2)) == (1, 2)
        assert mono_div((1, 2), (0, 2)) == (1,)
        assert mono_div((1,), (0, 1)) is None

    def test_grlex_order(self):
        # x1^2 > x1*x2 > x2^2 > x1 > x2 > 1
        ordered = [(2,), (1, 1), (0, 2), (1,), (0, 1), ()]
        assert sorted(ordered, key=order_key, reverse=True) == ordered


class TestArithmetic:
    def test_canonical_construction_merges_and_drops_zeros(self):
        p = Polynomial([((1,), 2), ((0, 1), 1), ((1,), -2)])
        assert p == P("x2")
        assert Polynomial({(1,): 0}).is_zero()

    def test_add_cancels(self):
        assert P("x1 + x2") + P("-x1") == P("x2")
        assert (P("x1") - P("x1")).is_zero()
        assert P("x1") + ZERO == P("x1")

    def test_mul(self):
        assert P("x1 + x2") * P("x1 - x2") == P("x1^2 - x2^2")
        assert (P("x1") * ZERO).is_zero()
        assert P("3") * P("x2") == P("3*x2")

    def test_mul_commutes_and_distributes(self):
        p, q, r = P("2*x1 + x2 - 3"), P("x1*x3 - 1"), P("x2^2 + 5")
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r

    def test_terms_are_canonical(self):
        p = P("1 + x2 + x1^2 + x1")
        assert p.monomials() == ((2,), (1,), (0, 1), ())

    def test_nterms(self):
        assert nterms(ZERO) == 0
        assert nterms(P("x1 + x2 + 1")) == 3

    def test_constant_and_variable_constructors(self):
        assert Polynomial.constant(0).is_zero()
        assert Polynomial.constant(1) == ONE_POLY
        assert Polynomial.variable(2, 5) == P("5*x2")

    def test_equal_polynomials_hash_equal(self):
        assert hash(P("x1 + x2")) == hash(P("x2 + x1"))


class TestDivExact:
    def test_exact_quotient(self):
        p, q = P("x1 + x2 + 1"), P("x1 - 2*x3")
        assert div_exact(p * q, q) == p

    def test_constant_divisor(self):
        assert div_exact(P("6*x1 - 4"), P("2")) == P("3*x1 - 2")
        assert div_exact(P("x1"), P("-1")) == P("-x1")

    def test_zero_dividend(self):
        assert div_exact(ZERO, P("x1")) == ZERO

    def test_remainder_raises(self):
        with pytest.raises(DivisionNotExact):
            div_exact(P("x1 + 1"), P("x2"))
        with pytest.raises(DivisionNotExact):
            div_exact(P("3*x1"), P("2"))
        with pytest.raises(DivisionNotExact):
            div_exact(P("x1^2 + 1"), P("x1 + 1"))

    def test_zero_divisor_raises(self):
        with pytest.raises(DivisionNotExact):
            div_exact(P("x1"), ZERO)


class TestHomogeneity:
    def test_is_homogeneous(self):
        assert is_homogeneous(P("x1*x2 + x3^2"), 2)
        assert not is_homogeneous(P("x1*x2 + x3"), 2)
        assert is_homogeneous(ZERO, 7)

    @pytest.mark.parametrize(
        "i,s,expected",
        [(0, 3, 1), (1, 3, 3), (2, 3, 6), (3, 2, 4), (5, 1, 1)],
    )
    def test_term_bound(self, i, s, expected):
        assert homogeneous_term_bound(i, s) == expected


def random_poly(rng: random.Random, s: int, max_terms: int = 4, max_deg: int = 2, deg=None) -> Polynomial:
    """Up to max_terms random terms; every term has total degree ``deg`` when given."""
    acc = {}
    for _ in range(rng.randint(0, max_terms)):
        target = deg if deg is not None else rng.randint(0, max_deg)
        exps = [0] * s
        for _ in range(target):
            exps[rng.randrange(s)] += 1
        acc[monomial(exps)] = rng.randint(-5, 5)
    return Polynomial(acc)


TRIPLES = 1000


@pytest.fixture(scope="module")
def triples():
    rng = random.Random(20240601)
    out = []
    for _ in range(TRIPLES):
        s = rng.randint(1, 3)
        out.append(tuple(random_poly(rng, s) for _ in range(3)))
    return out


class TestRingLaws:
    def test_addition(self, triples):
        for p, q, r in triples:
            assert p + q == q + p
            assert (p + q) + r == p + (q + r)
            assert p + ZERO == p
            assert (p - p).is_zero()

    def test_multiplication(self, triples):
        for p, q, r in triples:
            assert p * q == q * p
            assert (p * q) * r == p * (q * r)
            assert p * ONE_POLY == p

    def test_distributivity(self, triples):
        for p, q, r in triples:
            assert p * (q + r) == p * q + p * r
            assert (p - q) * r == p * r - q * r

    def test_div_exact_inverts_mul(self, triples):
        for p, q, _ in triples:
            if q.is_zero():
                continue
            assert div_exact(p * q, q) == p

    def test_nterms_bounds(self, triples):
        for p, q, _ in triples:
            assert nterms(p + q) <= nterms(p) + nterms(q)
            assert nterms(p * q) <= nterms(p) * nterms(q)

    def test_homogeneity_closure(self):
        rng = random.Random(7)
        for _ in range(TRIPLES):
            s = rng.randint(1, 4)
            i, j = rng.randint(0, 3), rng.randint(0, 3)
            p, p2 = random_poly(rng, s, deg=i), random_poly(rng, s, deg=i)
            q = random_poly(rng, s, deg=j)
            assert is_homogeneous(p, i) and is_homogeneous(q, j)
            assert is_homogeneous(p + p2, i)
            assert is_homogeneous(p * q, i + j)
            assert nterms(p * q) <= homogeneous_term_bound(i + j, s)
