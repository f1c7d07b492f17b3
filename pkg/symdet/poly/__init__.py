"""
Sparse multivariate integer polynomials.

Public API:
  - Polynomial, ZERO, ONE_POLY
  - add / sub / mul / div_exact / nterms
  - is_homogeneous / homogeneous_term_bound
  - parse_polynomial / format_polynomial
"""

import sys

# Coefficients are unbounded, so int <-> str conversion must be too.
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)

from symdet.poly.grammar import format_polynomial, parse_polynomial
from symdet.poly.monomial import Monomial, degree, monomial, variable
from symdet.poly.polynomial import (
    ONE_POLY,
    ZERO,
    Polynomial,
    add,
    div_exact,
    homogeneous_term_bound,
    is_homogeneous,
    mul,
    nterms,
    sub,
)

__all__ = [
    "Monomial",
    "ONE_POLY",
    "Polynomial",
    "ZERO",
    "add",
    "degree",
    "div_exact",
    "format_polynomial",
    "homogeneous_term_bound",
    "is_homogeneous",
    "monomial",
    "mul",
    "nterms",
    "parse_polynomial",
    "sub",
    "variable",
]
