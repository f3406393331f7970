"""Exception types shared across the library."""


class ContextMismatchError(ValueError):
    """Operands live in different ambient rings."""


class TheoremViolationError(RuntimeError):
    """An internally guaranteed postcondition failed.

    Raised when a certified construction (witness, component, stable-set
    complement) fails its own re-check; this signals a bug, never bad input.
    """


class ParseError(ValueError):
    """Source text rejected by the grammar, with position info."""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
