"""Exception hierarchy shared by all toricrank modules."""


class ToricrankError(Exception):
    """Base class for all domain errors raised by this package."""


class GraphFormatError(ToricrankError):
    """Malformed edge-list input; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class GraphError(ToricrankError):
    """Structurally invalid graph (loop, duplicate edge, disconnected, ...)."""


class CapExceededError(ToricrankError):
    """An enumeration guard was hit; rerun with an explicit larger cap."""


class BoundTooSmallError(ToricrankError):
    """The degree bound truncated the generator scan and candidates remain."""


class SearchGuardError(ToricrankError):
    """An exact search exceeded its configured size guard."""


class InternalCheckError(ToricrankError):
    """A built-in cross-check failed; indicates a bug, please report."""
