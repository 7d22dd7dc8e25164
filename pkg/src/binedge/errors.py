"""Exception types shared across the package."""


class BinedgeError(Exception):
    """Base class for all errors raised by this package."""


class GraphParseError(BinedgeError, ValueError):
    """Malformed edge-list or graph6 input."""

    def __init__(self, message, line=None, offset=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"offset {offset}")
        if where:
            message = f"{', '.join(where)}: {message}"
        super().__init__(message)
        self.line = line
        self.offset = offset


class PreconditionError(BinedgeError, ValueError):
    """An operation was called with arguments violating its precondition."""


class CapacityError(BinedgeError):
    """A computation exceeded a configured resource bound."""


class DomainError(BinedgeError, ValueError):
    """Input outside the mathematical domain of an operation."""
