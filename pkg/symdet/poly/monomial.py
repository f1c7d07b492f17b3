"""
Monomials as exponent tuples.

A monomial is a tuple of non-negative exponents, position k holding the
exponent of x_{k+1}. Trailing zeros are always stripped, so equal monomials
are equal tuples and the constant monomial is ``()``.
"""

from __future__ import annotations

from typing import Iterable, Optional, Tuple

from symdet.core.errors import VariableOutOfRange

Monomial = Tuple[int, ...]

ONE: Monomial = ()


def monomial(exponents: Iterable[int]) -> Monomial:
    """Normalize an exponent sequence; raises ValueError on negative exponents."""
    exps = list(exponents)
    for e in exps:
        if e < 0:
            raise ValueError(f"negative exponent in monomial: {exps}")
    while exps and exps[-1] == 0:
        exps.pop()
    return tuple(exps)


def variable(index: int) -> Monomial:
    """The monomial x_index (1-based)."""
    if index < 1:
        raise VariableOutOfRange(index, 0)
    return (0,) * (index - 1) + (1,)


def degree(m: Monomial) -> int:
    return sum(m)


def order_key(m: Monomial) -> Tuple[int, Monomial]:
    """
    Sort key for graded lexicographic order with x1 > x2 > ... .

    Sorting by this key in reverse gives the canonical (descending) order.
    Plain tuple comparison is lexicographic, and stripped tuples of equal
    degree can never be proper prefixes of each other.
    """
    return sum(m), m


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    return tuple([x + y for x, y in zip(a, b)]) + a[len(b):]


def mono_div(a: Monomial, b: Monomial) -> Optional[Monomial]:
    """a / b, or None when b does not divide a."""
    if len(b) > len(a):
        return None
    out = list(a)
    for k, e in enumerate(b):
        if out[k] < e:
            return None
        out[k] -= e
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)
