"""Exception hierarchy shared by every module of the engine."""


class ExactRealError(Exception):
    """Base class for all engine errors."""


class InvalidRational(ExactRealError, ValueError):
    """A rational pair with a zero or negative denominator, or an unparsable literal."""


class DivisionByZero(ExactRealError, ZeroDivisionError):
    pass


class InvalidTolerance(ExactRealError, ValueError):
    """A tolerance (epsilon) or effort parameter that is not positive."""


class InvalidApartness(ExactRealError, ValueError):
    """An apartness witness that does not hold for the denominator it was given for."""


class EmptyQuotient(ExactRealError, ValueError):
    """A raw quotient whose denominator vanishes at every scanned index."""


class InvalidInterval(ExactRealError, ValueError):
    pass


class DomainError(ExactRealError, ValueError):
    """An argument outside the domain of an operation (e.g. sqrt of a negative)."""


class ParseError(ExactRealError, ValueError):
    """Syntax error with the byte offset and the set of tokens that would have been accepted."""

    def __init__(self, message, offset, expected=()):
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        detail = f"{message} at offset {offset}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)


class FreeVariable(ExactRealError, ValueError):
    """An expression mentions ``x`` where no value for it is available."""
