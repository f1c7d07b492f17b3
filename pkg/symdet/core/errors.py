"""
Exception hierarchy for symdet.

Everything raised on purpose derives from ``SymdetError`` so the CLI can
tell a computation failure (exit 2) from a usage error (exit 1).
"""

from typing import Any, Optional


class SymdetError(Exception):
    """Base exception for symdet operations."""
    pass


class DivisionNotExact(SymdetError, ArithmeticError):
    """
    Exact polynomial division left a remainder.

    Inside fraction-free elimination every division is exact, so seeing this
    there means an implementation bug. The operands are kept for diagnosis.
    """

    def __init__(self, dividend: Any, divisor: Any, detail: str = ""):
        self.dividend = dividend
        self.divisor = divisor
        msg = f"division not exact: ({dividend}) / ({divisor})"
        if detail:
            msg = f"{msg}: {detail}"
        super().__init__(msg)


class PolynomialSyntaxError(SymdetError, ValueError):
    """Polynomial text does not follow the grammar."""

    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"{reason} at position {position}: {text!r}")


class VariableOutOfRange(SymdetError, ValueError):
    def __init__(self, index: int, s: int):
        self.index = index
        self.s = s
        super().__init__(f"variable x{index} out of range for s={s}")


class IndexOutOfRange(SymdetError, IndexError):
    pass


class DimensionMismatch(SymdetError, ValueError):
    pass


class InvalidRange(SymdetError, ValueError):
    pass


class MatrixFormatError(SymdetError, ValueError):
    """Matrix file content is malformed; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SizeGuardExceeded(SymdetError):
    def __init__(self, what: str, n: int, limit: int):
        self.n = n
        self.limit = limit
        super().__init__(f"{what}: n={n} exceeds size guard {limit}")


class TimeCeilingExceeded(SymdetError):
    """A timed trial ran past the wall-clock ceiling. Recorded, not propagated."""

    def __init__(self, elapsed_ns: int, ceiling_ns: int):
        self.elapsed_ns = elapsed_ns
        self.ceiling_ns = ceiling_ns
        super().__init__(
            f"trial took {elapsed_ns / 1e9:.2f}s, ceiling is {ceiling_ns / 1e9:.2f}s"
        )


class ResultMismatch(SymdetError, AssertionError):
    """Two algorithms returned different determinants for the same matrix."""
    pass


class BenchIoError(SymdetError, OSError):
    """Writing or reading a result file failed."""
    pass
