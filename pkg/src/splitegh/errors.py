"""Exception hierarchy shared by the library and the command line."""


class EghError(Exception):
    """Base class for all errors raised by :mod:`splitegh`."""


class ArgumentError(EghError, ValueError):
    """An argument violates an operation's precondition."""


class DimensionError(ArgumentError):
    """Objects living in different rings (or degrees) were combined."""


class NotRealizableError(EghError):
    """A Hilbert function cannot be realized by the requested kind of ideal."""


class InternalInvariantError(EghError):
    """A property guaranteed by the construction failed to hold.

    Carries the trace collected so far so that the failure can be inspected.
    """

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = list(trace or [])


class ProblemSyntaxError(ArgumentError):
    """Malformed problem text; ``line`` and ``column`` are 1-based."""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message
