"""Exception hierarchy shared by the whole package."""


class FlowError(Exception):
    """Base class for all errors raised by this package."""


class InstanceError(FlowError):
    """A vertex or edge id does not belong to the network."""


class PreconditionError(FlowError):
    """A documented operation precondition was violated by the caller."""


class InputError(FlowError):
    """A solver rejected its problem instance during validation."""


class NegativeCycleError(InputError):
    """The network contains a directed cycle of negative total cost."""


class PathNotFoundError(FlowError):
    """A requested path or connection does not exist."""


class ParseError(FlowError):
    """Malformed instance text; carries the offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class SearchSpaceError(FlowError):
    """The brute-force oracle refuses an instance that is too large."""


class InternalInvariantError(FlowError):
    """An internal invariant failed; indicates a bug, not bad input."""
