"""Exception types shared across the package."""


class EulerscanError(Exception):
    """Base class for all errors raised by this package."""


class OrderOutOfRange(EulerscanError):
    """Graph order outside the supported range."""


class VertexOutOfRange(EulerscanError):
    """A vertex id does not exist in the graph."""


class LoopEdge(EulerscanError):
    """An edge with identical endpoints was supplied."""


class MalformedGraph6(EulerscanError):
    """Input text is not a valid graph6 encoding."""


class OrderTooLarge(EulerscanError):
    """Operation restricted to a smaller order than the supplied graph."""


class DisconnectedGraph(EulerscanError):
    """Distance-based quantity requested for a disconnected graph."""


class SpecViolation(EulerscanError):
    """A construction, enumeration, or scan request violates its constraints."""
