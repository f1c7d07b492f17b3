"""
Polynomial text format.

    poly     := ['-'] term (('+'|'-') term)*
    term     := integer | integer '*' monomial | monomial
    monomial := varpow ('*' varpow)*
    varpow   := 'x' index ['^' positive-integer]

Whitespace between tokens is ignored. Printing is canonical: terms in
graded-lex descending order, coefficient 1 and exponent 1 elided, zero
printed as "0"; parsing a printed polynomial gives the same polynomial.
"""

from __future__ import annotations

import re
from typing import Dict, List, Optional, Tuple

from symdet.core.errors import PolynomialSyntaxError, VariableOutOfRange
from symdet.poly.monomial import Monomial, monomial
from symdet.poly.polynomial import Polynomial

_TOKEN = re.compile(r"\s*(?:(?P<int>[0-9]+)|(?P<sym>[-+*^x]))")
_TRAILING_SPACE = re.compile(r"\s*\Z")

Token = Tuple[str, str, int]  # (kind, text, position)


def _tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while not _TRAILING_SPACE.match(text, pos):
        m = _TOKEN.match(text, pos)
        if not m:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolynomialSyntaxError(text, bad, f"unexpected character {text[bad]!r}")
        if m.group("int") is not None:
            tokens.append(("int", m.group("int"), m.start("int")))
        else:
            tokens.append((m.group("sym"), m.group("sym"), m.start("sym")))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, s: Optional[int]):
        self.text = text
        self.s = s
        self.tokens = _tokenize(text)
        self.i = 0

    def _peek(self) -> Optional[str]:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def _pos(self) -> int:
        return self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)

    def _fail(self, reason: str) -> PolynomialSyntaxError:
        return PolynomialSyntaxError(self.text, self._pos(), reason)

    def _expect(self, kind: str, what: str) -> Token:
        if self._peek() != kind:
            raise self._fail(f"expected {what}")
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise self._fail("empty polynomial")
        acc: Dict[Monomial, int] = {}
        sign = 1
        if self._peek() == "-":
            self.i += 1
            sign = -1
        self._term(acc, sign)
        while self._peek() in ("+", "-"):
            sign = 1 if self.tokens[self.i][0] == "+" else -1
            self.i += 1
            self._term(acc, sign)
        if self._peek() is not None:
            raise self._fail(f"unexpected {self.tokens[self.i][1]!r}")
        return Polynomial(acc)

    def _term(self, acc: Dict[Monomial, int], sign: int) -> None:
        kind = self._peek()
        if kind == "int":
            coeff = int(self.tokens[self.i][1])
            self.i += 1
            if self._peek() == "*":
                self.i += 1
                mono = self._monomial()
            else:
                mono = ()
        elif kind == "x":
            coeff = 1
            mono = self._monomial()
        else:
            raise self._fail("expected term")
        acc[mono] = acc.get(mono, 0) + sign * coeff

    def _monomial(self) -> Monomial:
        exps: List[int] = []
        self._varpow(exps)
        while self._peek() == "*":
            self.i += 1
            self._varpow(exps)
        return monomial(exps)

    def _varpow(self, exps: List[int]) -> None:
        self._expect("x", "variable 'x'")
        pos = self._pos()
        index = int(self._expect("int", "variable index")[1])
        if index < 1:
            raise PolynomialSyntaxError(self.text, pos, "variable index must be positive")
        if self.s is not None and index > self.s:
            raise VariableOutOfRange(index, self.s)
        power = 1
        if self._peek() == "^":
            self.i += 1
            pos = self._pos()
            power = int(self._expect("int", "exponent")[1])
            if power < 1:
                raise PolynomialSyntaxError(self.text, pos, "exponent must be positive")
        if len(exps) < index:
            exps.extend([0] * (index - len(exps)))
        exps[index - 1] += power


def parse_polynomial(text: str, s: Optional[int] = None) -> Polynomial:
    """Parse polynomial text; with ``s`` given, variables beyond x_s are rejected."""
    return _Parser(text, s).parse()


def _format_monomial(m: Monomial) -> str:
    return "*".join(
        f"x{k + 1}" if e == 1 else f"x{k + 1}^{e}" for k, e in enumerate(m) if e
    )


def format_polynomial(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    out: List[str] = []
    for idx, (m, c) in enumerate(p.terms):
        mono = _format_monomial(m)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if idx == 0:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out)
