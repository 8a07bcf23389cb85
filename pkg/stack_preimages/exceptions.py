"""The exceptions raised by this package. Every error derives from
``StackPreimagesError`` so that callers (and the command line interface) can catch
them in one place.
"""


class StackPreimagesError(Exception):
    """The base class for all errors raised by this package."""


class PermutationError(StackPreimagesError, ValueError):
    """Raised when a permutation is malformed or lies outside of a required class."""


class PatternError(StackPreimagesError, ValueError):
    """Raised when a pattern is malformed or uses an unsupported combination of marks."""


class SeriesError(StackPreimagesError, ValueError):
    """Raised when a power series operation is undefined for its operands."""


class InexactDivisionError(StackPreimagesError, ArithmeticError):
    """Raised when a closed form that must evaluate to an integer leaves a remainder."""


class CapExceededError(StackPreimagesError, ValueError):
    """Raised when an exhaustive computation is requested beyond its configured cap."""

    def __init__(self, what: str, n: int, cap: int):
        super(CapExceededError, self).__init__(what, n, cap)

        self.what = what
        self.n = n
        self.cap = cap

    def __str__(self):
        return f"{self.what} was requested for n={self.n} but is capped at n={self.cap}."


class UnknownIdentifierError(StackPreimagesError, KeyError):
    """Raised when a family, formula, series or check id is not recognised."""

    def __init__(self, kind: str, identifier: str, choices=None):

        # Names only, instances must survive pickling.
        choices = tuple(sorted(choices)) if choices else ()

        super(UnknownIdentifierError, self).__init__(kind, identifier, choices)

        self.kind = kind
        self.identifier = identifier
        self.choices = choices

    def __str__(self):

        message = f"unknown {self.kind} '{self.identifier}'"

        if self.choices:
            message += f", expected one of {', '.join(self.choices)}"

        return message


class InvalidInputError(StackPreimagesError, ValueError):
    """Raised when a numeric argument lies outside of the range an operation accepts."""


class CompositionError(StackPreimagesError, ValueError):
    """Raised when a tuple is not a composition or partition of the expected shape."""
