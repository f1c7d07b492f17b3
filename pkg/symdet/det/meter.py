"""Integer-operation accounting for determinant algorithms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List

from symdet.poly import Polynomial, div_exact, mul


@dataclass
class CostMeter:
    """
    Modeled cost of a computation: multiplying or dividing p by q is charged
    nterms(p) * nterms(q) integer operations; additions and negations are free.

    A meter belongs to one computation and is not shared between threads.
    """

    modeled_int_ops: int = 0
    poly_mults: int = 0
    poly_divs: int = 0

    def mul(self, p: Polynomial, q: Polynomial) -> Polynomial:
        self.poly_mults += 1
        self.modeled_int_ops += p.nterms() * q.nterms()
        return mul(p, q)

    def div(self, p: Polynomial, q: Polynomial) -> Polynomial:
        self.poly_divs += 1
        self.modeled_int_ops += p.nterms() * q.nterms()
        return div_exact(p, q)

    def report_lines(self) -> List[str]:
        return [
            f"poly_mults={self.poly_mults}",
            f"poly_divs={self.poly_divs}",
            f"modeled_int_ops={self.modeled_int_ops}",
        ]
