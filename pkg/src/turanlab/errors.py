"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class TuranLabError(Exception):
    """Base class for all errors raised by this package."""


class ArgumentError(TuranLabError, ValueError):
    """Invalid argument: loops, undersized parameters, bad recipes."""


class ParseError(ArgumentError):
    """Malformed graph6 text or pattern string.

    ``offset`` is the byte/character position of the offending token when known.
    """

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)
        self.offset = offset


class CapabilityError(TuranLabError):
    """Requested size exceeds what an algorithm supports."""


class CapacityError(CapabilityError):
    """A graph would exceed the 64-vertex capacity."""


class ConstructionError(TuranLabError):
    """A construction failed its own validation (never expected to fire)."""


class BudgetExceeded(TuranLabError):
    """A search ran past its time budget."""
