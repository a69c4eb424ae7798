"""Exception types raised by kacv.

All of them are ``ValueError`` subclasses so callers that only know about
``ValueError`` keep working; the CLI maps every one of them to exit code 2.
"""

from typing import Optional


class KacError(ValueError):
    """Base class for kacv errors."""


class BudgetExceededError(KacError):
    """An enumeration would exceed the configured budget."""

    def __init__(self, what: str, cost: int, budget: int):
        self.what = what
        self.cost = cost
        self.budget = budget
        super().__init__(
            f"Refusing {what}: cost {cost} exceeds budget {budget}"
        )


class BadPrimeError(KacError):
    """The characteristic divides some λ·β, so λ is not generic over F_p."""

    def __init__(self, p: int, beta: Optional[tuple] = None,
                 value: Optional[int] = None):
        self.p = p
        self.beta = beta
        self.value = value
        detail = f" (λ·{beta} = {value})" if beta is not None else ""
        super().__init__(f"Prime {p} is not admissible{detail}")


class NotGenericError(KacError):
    """A weight vector fails the genericity condition."""


class DivisibleDimensionError(KacError):
    """A dimension vector has gcd > 1 where an indivisible one is required."""


class InexactDivisionError(KacError):
    """An exact division left a remainder; indicates an implementation bug."""

    def __init__(self, numerator: int, denominator: int, context: str = ''):
        self.numerator = numerator
        self.denominator = denominator
        where = f" in {context}" if context else ""
        super().__init__(
            f"Inexact division{where}: {numerator} / {denominator}"
        )


class HNUniquenessError(KacError):
    """More than one maximal destabilizing subrepresentation was found."""


class ConjectureViolationError(KacError):
    """A Kac polynomial has a negative coefficient."""


class QuiverFileError(KacError):
    """A quiver file could not be parsed."""

    def __init__(self, message: str, line_no: Optional[int] = None):
        self.line_no = line_no
        prefix = f"line {line_no}: " if line_no is not None else ""
        super().__init__(f"{prefix}{message}")
