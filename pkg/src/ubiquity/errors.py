"""Exception hierarchy shared by every module of the package."""


class UbiquityError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(UbiquityError, ValueError):
    """A value does not satisfy the laws of the structure it claims to be."""

    def __init__(self, message, clause=None, witness=None):
        super().__init__(message)
        self.clause = clause
        self.witness = witness


class DomainMismatchError(UbiquityError, ValueError):
    """Operands live in different algebras or on different domains."""


class PreconditionError(UbiquityError, ValueError):
    """An operation was called outside its domain of definition."""


class SizeGuardError(UbiquityError):
    """An exhaustive sweep would exceed its size guard."""

    def __init__(self, message, estimate=None, limit=None):
        super().__init__(message)
        self.estimate = estimate
        self.limit = limit


class ParseError(UbiquityError, SyntaxError):
    """Formula text could not be parsed.

    ``line`` and ``column`` are 1-based; ``expected`` is the set of token
    descriptions that would have been accepted at that position.
    """

    def __init__(self, message, line, column, expected=()):
        self.line = line
        self.column = column
        self.expected = frozenset(expected)
        detail = message
        if self.expected:
            detail += f" (expected one of: {', '.join(sorted(self.expected))})"
        super().__init__(f"{line}:{column}: {detail}")


class ArityError(UbiquityError, ValueError):
    """A predicate symbol is used with two different arities."""
