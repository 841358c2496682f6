# csformula/exceptions.py

"""
Error types raised by the library.

Every error derives from CSFormulaError, itself a ValueError, so callers
that only care about "bad input" can catch ValueError the same way the
data loaders are used.
"""

from __future__ import annotations

from typing import Any, Sequence


class CSFormulaError(ValueError):
    pass


class LatticeMismatch(CSFormulaError):
    """Operands live on different lattices."""


class NonDivisible(CSFormulaError):
    """Exact division left a nonzero remainder."""


class NonDominant(CSFormulaError):
    pass


class NonStrictlyDominant(CSFormulaError):
    pass


class MissingTableEntry(CSFormulaError):
    def __init__(self, missing: Sequence[Any]):
        self.missing = list(missing)
        super().__init__(f"Whittaker table has no value at: {self.missing}")


class EmptyConstraintSet(CSFormulaError):
    pass


class RhoNotInLattice(CSFormulaError):
    pass


class NotInImageOfRprime(CSFormulaError):
    pass


class IrrationalSqrt(CSFormulaError):
    pass


class InvalidCartanType(CSFormulaError):
    pass


class InvalidLattice(CSFormulaError):
    pass


class MultNotOrbitConstant(CSFormulaError):
    pass


class NotSimpleRoot(CSFormulaError):
    pass


class TermSyntaxError(CSFormulaError):
    pass
