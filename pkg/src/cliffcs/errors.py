"""Exception types raised across the package."""

from __future__ import annotations


class CliffCSError(Exception):
    """Base class for all errors raised by cliffcs."""


class NotDivisible(CliffCSError, ArithmeticError):
    pass


class NotRealInteger(CliffCSError, ValueError):
    pass


class PreconditionViolated(CliffCSError, ValueError):
    pass


class HypothesisViolated(CliffCSError, ValueError):
    pass


class UnknownToken(CliffCSError, ValueError):
    pass


class NotInGroup(CliffCSError, ValueError):
    """The matrix is not (a phase multiple of) a Clifford+CS operator."""


class InsufficientExponent(CliffCSError, ValueError):
    pass


class NoFinerGenerator(CliffCSError, LookupError):
    pass


class KeyMissing(CliffCSError, LookupError):
    pass


class BadRange(CliffCSError, ValueError):
    pass


class NotNormalForm(CliffCSError, ValueError):
    pass


class BadInput(CliffCSError, ValueError):
    pass


class BadEpsilon(CliffCSError, ValueError):
    pass


class ParseError(CliffCSError, ValueError):
    pass
