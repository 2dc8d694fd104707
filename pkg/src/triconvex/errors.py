"""Exception types shared by the whole package."""


class TriconvexError(Exception):
    """Base class for all errors raised by this package."""


class GraphFormatError(TriconvexError):
    """Malformed graph input (edge-list or graph6 text)."""


class PreconditionError(TriconvexError):
    """An operation was called outside its documented domain."""


class CapacityError(TriconvexError):
    """An exhaustive solver was asked to exceed its hard size cap."""
