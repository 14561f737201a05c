"""Exception hierarchy shared by every module."""


class LeviscopeError(Exception):
    """Base class for all errors raised by leviscope."""


class SpaceMismatchError(LeviscopeError, ValueError):
    """Operands live in different variable spaces."""


class ResourceLimitError(LeviscopeError):
    """A configured term-count or degree cap was exceeded."""


class EmptyVarietyError(LeviscopeError, ValueError):
    """The ideal contains 1, so its zero set is empty."""


class ParseError(LeviscopeError, ValueError):
    """Malformed expression text. Carries 1-based line and column."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class NotRealValuedError(LeviscopeError, ValueError):
    """No unit multiple of the polynomial satisfies the reality condition."""


class DegenerateInputError(LeviscopeError, ValueError):
    """Input is constant, zero, or otherwise outside the operation's domain."""


class InconsistentSplitError(LeviscopeError, ValueError):
    """A supplied P/H decomposition does not sum to the complexified polynomial."""


class ParameterError(LeviscopeError, ValueError):
    """Catalog parameters violate the table's constraints."""


class PreconditionError(LeviscopeError, ValueError):
    """An operation's documented precondition does not hold."""


class BlowupError(LeviscopeError, ValueError):
    """The pulled-back polynomial is not divisible by the expected power of u."""

    def __init__(self, message: str, multiplicity: int):
        self.multiplicity = multiplicity
        super().__init__(message)
