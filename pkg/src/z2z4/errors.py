"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class Z2Z4Error(Exception):
    """Base class for all domain errors raised by this package."""


class ShapeError(Z2Z4Error, ValueError):
    """Operands live in different ambient spaces (alpha, beta mismatch)."""


class SymbolError(Z2Z4Error, ValueError):
    """A coordinate value is outside its alphabet (>= 2 on X, >= 4 on Y)."""


class DegenerateCodeError(Z2Z4Error, ValueError):
    """A generating set spans only the zero code where a proper code is required."""


class InfeasibleError(Z2Z4Error, ValueError):
    """Requested type parameters or invariants cannot be realised.

    ``bound`` names the violated constraint (e.g. ``"rank_range"``).
    """

    def __init__(self, message: str, bound: str | None = None) -> None:
        super().__init__(message)
        self.bound = bound


class BoundViolation(Z2Z4Error, AssertionError):
    """Measured rank/kernel values fall outside the proven ranges."""

    def __init__(self, message: str, bound: str) -> None:
        super().__init__(message)
        self.bound = bound


class CoverViolation(Z2Z4Error, AssertionError):
    """The kernel coset decomposition failed; ``witness`` is an offending binary vector."""

    def __init__(self, message: str, witness=None) -> None:
        super().__init__(message)
        self.witness = witness


class GuardExceeded(Z2Z4Error, RuntimeError):
    """An enumeration would exceed the configured size guard."""

    def __init__(self, message: str, required: dict[str, int] | None = None) -> None:
        super().__init__(message)
        self.required = dict(required or {})


class ParseError(Z2Z4Error, ValueError):
    """Malformed matrix file; carries 1-based line and column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None) -> None:
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
        self.line = line
        self.column = column
