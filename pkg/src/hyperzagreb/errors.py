"""Exception hierarchy.

Every error raised by the library derives from :class:`HyperZagrebError`, and
the input-validation errors also derive from :class:`ValueError` so callers can
catch them the usual way.
"""


class HyperZagrebError(Exception):
    pass


class HypergraphError(HyperZagrebError, ValueError):
    """A hypergraph invariant was violated."""


class EmptyVertexSet(HypergraphError):
    pass


class EdgeTooSmall(HypergraphError):
    pass


class VertexOutOfRange(HypergraphError):
    pass


class DuplicateEdge(HypergraphError):
    pass


class NoEdges(HypergraphError):
    pass


class InvalidPartition(HypergraphError):
    pass


class TooFewVertices(HypergraphError):
    pass


class FormatError(HypergraphError):
    """Malformed .hg / JSON / inline text."""


class InvalidFamilyParams(HyperZagrebError, ValueError):
    pass


class SpaceTooLarge(HyperZagrebError):
    pass


class UnsupportedN(HyperZagrebError):
    pass


class UnknownClaim(HyperZagrebError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class QSARError(HyperZagrebError, ValueError):
    pass


class DuplicateName(QSARError):
    pass


class TooFewRows(QSARError):
    pass


class MissingActivity(QSARError):
    pass


class FitError(QSARError):
    pass


class InvalidSpaceParams(HyperZagrebError, ValueError):
    pass
