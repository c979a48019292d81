"""Exception types shared across the package."""


class HypergraphError(Exception):
    """Base class for every error raised by hyperdual."""


class ParseError(HypergraphError, ValueError):
    """Malformed hypergraph, graph, ordering or color file."""

    def __init__(self, line=None):
        self.line = line
        super().__init__(str(self))

    def __str__(self):
        name = type(self).__name__
        return name if self.line is None else f"{name}({self.line})"


class EmptyEdge(ParseError):
    pass


class VertexOutOfRange(ParseError):
    pass


class BadHeader(ParseError):
    pass


class SelfLoop(ParseError):
    pass


class TruncatedInput(ParseError):
    """Fewer edge lines than announced in the header."""


class TrailingData(ParseError):
    """Non-blank content after the announced edge lines."""


class NotAPermutation(HypergraphError, ValueError):
    pass


class VertexNotInSet(HypergraphError, ValueError):
    pass


class NotAMinimalTransversal(HypergraphError, ValueError):
    pass


class InvalidNode(HypergraphError, ValueError):
    pass


class TooLargeForOracle(HypergraphError, ValueError):
    pass


class NeedTwoColors(HypergraphError, ValueError):
    pass


class InvariantViolation(HypergraphError, AssertionError):
    """A structural guarantee of the algorithm failed at runtime."""


class BadToken(ParseError):
    """A non-integer token, or the wrong number of tokens on a line."""
