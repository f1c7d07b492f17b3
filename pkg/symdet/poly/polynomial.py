"""
Sparse multivariate polynomials over the integers.

Terms are kept as a tuple of ``(monomial, coefficient)`` pairs in canonical
order (graded lexicographic, descending) with no zero coefficients. Python
ints are arbitrary precision, so elimination intermediates never overflow.
Values are immutable and safe to share between threads.
"""

from __future__ import annotations

import math
from typing import Dict, Iterable, List, Mapping, Tuple, Union

from symdet.core.errors import DivisionNotExact
from symdet.poly.monomial import (
    ONE,
    Monomial,
    mono_div,
    mono_mul,
    monomial,
    order_key,
    variable,
)

Term = Tuple[Monomial, int]
TermSource = Union[Mapping[Monomial, int], Iterable[Term]]


def _canonical(acc: Dict[Monomial, int]) -> Tuple[Term, ...]:
    items = [(m, c) for m, c in acc.items() if c]
    items.sort(key=lambda t: order_key(t[0]), reverse=True)
    return tuple(items)


def _merge(a: Tuple[Term, ...], b: Iterable[Term], sign: int) -> Tuple[Term, ...]:
    """a + sign*b for two canonically ordered term sequences (linear merge)."""
    b = list(b)
    out: List[Term] = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        ma, ca = a[i]
        mb, cb = b[j]
        if ma == mb:
            c = ca + sign * cb
            if c:
                out.append((ma, c))
            i += 1
            j += 1
        elif order_key(ma) > order_key(mb):
            out.append(a[i])
            i += 1
        else:
            out.append((mb, sign * cb))
            j += 1
    out.extend(a[i:])
    if sign == 1:
        out.extend(b[j:])
    else:
        out.extend((m, -c) for m, c in b[j:])
    return tuple(out)


class Polynomial:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: TermSource = ()):
        acc: Dict[Monomial, int] = {}
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        for m, c in pairs:
            key = monomial(m)
            acc[key] = acc.get(key, 0) + int(c)
        self._terms = _canonical(acc)
        self._hash = None

    @classmethod
    def _from_canonical(cls, terms: Tuple[Term, ...]) -> "Polynomial":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls._from_canonical(((ONE, int(c)),) if c else ())

    @classmethod
    def variable(cls, index: int, coeff: int = 1) -> "Polynomial":
        return cls._from_canonical(((variable(index), int(coeff)),) if coeff else ())

    @property
    def terms(self) -> Tuple[Term, ...]:
        return self._terms

    def nterms(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def monomials(self) -> Tuple[Monomial, ...]:
        return tuple(m for m, _ in self._terms)

    def max_variable(self) -> int:
        """Highest variable index used (0 for constants)."""
        return max((len(m) for m, _ in self._terms), default=0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __neg__(self) -> "Polynomial":
        return Polynomial._from_canonical(tuple((m, -c) for m, c in self._terms))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return sub(self, other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return mul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __str__(self) -> str:
        from symdet.poly.grammar import format_polynomial

        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


ZERO = Polynomial._from_canonical(())
ONE_POLY = Polynomial._from_canonical(((ONE, 1),))


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    if not q._terms:
        return p
    if not p._terms:
        return q
    return Polynomial._from_canonical(_merge(p._terms, q._terms, 1))


def sub(p: Polynomial, q: Polynomial) -> Polynomial:
    if not q._terms:
        return p
    return Polynomial._from_canonical(_merge(p._terms, q._terms, -1))


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    if not p._terms or not q._terms:
        return ZERO
    if len(p._terms) > len(q._terms):
        p, q = q, p
    acc: Dict[Monomial, int] = {}
    get = acc.get
    for mp, cp in p._terms:
        for mq, cq in q._terms:
            m = mono_mul(mp, mq)
            acc[m] = get(m, 0) + cp * cq
    return Polynomial._from_canonical(_canonical(acc))


def _shifted(q: Polynomial, m: Monomial, c: int) -> List[Term]:
    # monomial orders are multiplicative, so the shifted terms stay canonical
    return [(mono_mul(m, mq), c * cq) for mq, cq in q._terms]


def div_exact(p: Polynomial, q: Polynomial) -> Polynomial:
    """
    Exact quotient p / q by repeated leading-term elimination.

    Raises DivisionNotExact if a leading monomial or coefficient does not
    divide, i.e. whenever q does not divide p in Z[x].
    """
    if not q._terms:
        raise DivisionNotExact(p, q, "zero divisor")
    if not p._terms:
        return ZERO
    lm_q, lc_q = q._terms[0]
    if len(q._terms) == 1 and lm_q == ONE:
        if lc_q == 1:
            return p
        if lc_q == -1:
            return -p
        out = []
        for m, c in p._terms:
            k, r = divmod(c, lc_q)
            if r:
                raise DivisionNotExact(p, q, f"coefficient {c} not divisible by {lc_q}")
            out.append((m, k))
        return Polynomial._from_canonical(tuple(out))

    quotient: List[Term] = []
    remainder = p._terms
    while remainder:
        m, c = remainder[0]
        qm = mono_div(m, lm_q)
        if qm is None:
            raise DivisionNotExact(p, q, "leading monomial not divisible")
        qc, r = divmod(c, lc_q)
        if r:
            raise DivisionNotExact(p, q, f"leading coefficient {c} not divisible by {lc_q}")
        quotient.append((qm, qc))
        remainder = _merge(remainder, _shifted(q, qm, qc), -1)
    return Polynomial._from_canonical(tuple(quotient))


def nterms(p: Polynomial) -> int:
    return len(p._terms)


def is_homogeneous(p: Polynomial, i: int) -> bool:
    """True iff every term has total degree exactly i; the zero polynomial qualifies for every i."""
    return all(sum(m) == i for m, _ in p._terms)


def homogeneous_term_bound(i: int, s: int) -> int:
    """Number of degree-i monomials in s variables, C(i+s-1, s-1)."""
    return math.comb(i + s - 1, s - 1)
