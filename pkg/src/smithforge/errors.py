"""Exception types shared across the package.

Input and precondition problems all derive from SmithforgeError so callers
(notably the CLI) can map them to a single "invalid input" outcome.
InternalMismatch is deliberately separate in spirit: it signals that two
independent computation paths disagreed, i.e. a bug, never bad user input.
"""

from __future__ import annotations


class SmithforgeError(Exception):
    """Base class for all library errors."""


class EmptyInput(SmithforgeError):
    """Raised when a set constructor receives no elements."""


class NonPositive(SmithforgeError):
    """Raised when an element is not a positive integer."""

    def __init__(self, value: object):
        super().__init__(f"elements must be positive integers, got {value!r}")
        self.value = value


class MalformedInput(SmithforgeError):
    """Raised when a set literal or input file cannot be parsed."""


class DuplicateElement(SmithforgeError):
    """Raised when a set constructor receives a repeated element."""

    def __init__(self, value: int):
        super().__init__(f"duplicate element {value}")
        self.value = value


class NotAnElement(SmithforgeError):
    """Raised when a queried value does not belong to the set."""

    def __init__(self, value: int):
        super().__init__(f"{value} is not an element of the set")
        self.value = value


class BadIndex(SmithforgeError):
    """Raised for an out-of-range or empty position selection."""


class NoGtds(SmithforgeError):
    """Raised when an operation needs greatest-type divisors but none exist."""


class NotAProperDivisor(SmithforgeError):
    """Raised when an interval endpoint is not a proper divisor of the other."""


class NotGcdClosed(SmithforgeError):
    """Raised when an operation requires a gcd-closed set."""


class ConditionGFails(SmithforgeError):
    """Raised when an operation requires the pairwise lcm/meet condition."""

    def __init__(self, message: str = "set does not satisfy the gcd/lcm structure condition", witness: object = None):
        super().__init__(message)
        self.witness = witness


class NotDivisibleExponents(SmithforgeError):
    """Raised when a closed form requires the exponent a to divide b."""

    def __init__(self, a: int, b: int):
        super().__init__(f"exponent {a} does not divide {b}")
        self.a = a
        self.b = b


class SingularMatrix(SmithforgeError):
    """Raised when inverting a matrix with determinant zero."""


class DimensionMismatch(SmithforgeError):
    """Raised when matrix operands have incompatible sizes."""


class BadRange(SmithforgeError):
    """Raised for an invalid integer range in determinant closed forms."""


class InternalMismatch(SmithforgeError):
    """Two independent computation paths disagreed; indicates a bug."""
