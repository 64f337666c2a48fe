"""Exception types shared across the package."""


class BairecombError(Exception):
    """Base class for all package errors."""


class NotASeqCode(BairecombError):
    """Integer is not the prime code of any finite word."""


class EnumerationBudgetExceeded(BairecombError):
    """A code enumeration grew past the configured desk-scale bound."""


class HorizonExceeded(BairecombError):
    """A generated base point was evaluated past its feasible schedule horizon."""


class DifferentBases(BairecombError):
    """Operation requires two tail points over the same base point."""


class PreconditionFailed(BairecombError):
    """A stated operation precondition does not hold for the input."""


class IndexOutOfDimension(BairecombError):
    """Tuple coordinate index is not below the finite dimension."""


class MissingVertex(BairecombError):
    """A coloring does not cover some vertex of the truncation."""


class TooLarge(BairecombError):
    """Vertex set exceeds the exhaustive-search bound."""


class NotAPartition(BairecombError):
    """Given parts do not partition the vertex set."""


class PartNotDiscrete(BairecombError):
    """A part of a claimed partition carries a whole hyperedge."""


class AlphabetTooSmall(BairecombError):
    """Truncation alphabet does not contain the letters of the hub words."""


class VertexNotInGraph(BairecombError):
    """Word is not a vertex of the level graph."""


class Disconnected(BairecombError):
    """No path between the two vertices."""


class NotAPath(BairecombError):
    """Vertex list is not a path in the level graph."""


class NotCanonical(BairecombError):
    """Tail point is not in canonical form for the requested operation."""


class NoSafeLetter(BairecombError):
    """No letter below the bound keeps the hit count stable."""

    def __init__(self, position, candidate_counts):
        super().__init__(
            "no safe letter at position %d; candidate hit counts %r"
            % (position, candidate_counts)
        )
        self.position = position
        self.candidate_counts = candidate_counts


class ContractBreach(BairecombError):
    """An oracle reply violated the monotone-prefix contract."""

    def __init__(self, kind, evidence, detail=""):
        super().__init__("%s: %s" % (kind, detail))
        self.kind = kind
        self.evidence = evidence
        self.detail = detail


class OutOfFuel(BairecombError):
    """The adversary's query budget ran out."""


class UsageError(BairecombError):
    """Bad CLI arguments or config."""
