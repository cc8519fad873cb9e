"""Exception hierarchy shared by the whole package."""


class ArborError(Exception):
    """Base class for all package-specific errors."""


class FormatError(ArborError):
    """Malformed graph or coloring document."""


class OutOfScope(ArborError):
    """The input graph has max degree below half its order; no construction applies."""


class InsufficientMatching(ArborError):
    """A matching of the requested size does not exist in the host graph.

    When the caller's degree preconditions guarantee the size (disconnected
    host, or connected host with more than twice the min degree many
    vertices), seeing this error means an internal defect.
    """


class DegreeTooLow(ArborError):
    """Cycle extraction needs induced minimum degree at least 2."""


class NotConnected(ArborError):
    """Operation requires a connected (induced) graph."""


class TargetUnreachable(ArborError):
    """Path growth stalled below the requested length; signals a violated precondition."""


class AllocationFailed(ArborError):
    """Cycle block allocation could not cover the required class counts."""


class ConstructionFailed(ArborError):
    """A constructed coloring failed its own final verification."""


class CapExceeded(ArborError):
    """Exact-oracle input is larger than the configured cap."""
