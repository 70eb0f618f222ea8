"""Exception hierarchy."""


class GraphError(ValueError):
    """Base class for all errors raised by this package."""


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class NonpositiveWeight(GraphError):
    pass


class DisconnectedGraph(GraphError):
    pass


class SingleVertex(GraphError):
    pass


class UnknownVertex(GraphError, KeyError):
    def __str__(self):
        return ValueError.__str__(self)


class NotAdjacent(GraphError):
    pass


class GirthTooSmall(GraphError):
    pass


class NotPending(GraphError):
    pass


class WrongMode(GraphError):
    pass


class BadParameter(GraphError):
    pass


class BadConfig(GraphError):
    pass


class ParseError(GraphError):
    """Malformed graph text. ``lineno`` is 1-based, or ``None`` for whole-file problems."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
