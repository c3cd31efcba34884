"""Exception hierarchy shared by all modules."""


class HypergraphError(Exception):
    """Base class for all errors raised by this package."""


class EmptyVertexSet(HypergraphError):
    pass


class EdgeNotSubsetOfV(HypergraphError):
    def __init__(self, edge_index: int):
        self.edge_index = edge_index
        super().__init__(f"edge e{edge_index} is not a subset of the vertex set")


class UnknownVertex(HypergraphError):
    pass


class UnknownEdgeId(HypergraphError):
    pass


class BadVertexSubset(HypergraphError):
    pass


class NotAnEdgeCut(HypergraphError):
    pass


class NotMinimal(HypergraphError):
    pass


class Disconnected(HypergraphError):
    pass


class TrivialHypergraph(HypergraphError):
    pass


class TooLarge(HypergraphError):
    pass


class InvalidAssignment(HypergraphError):
    pass


class SingleComponent(HypergraphError):
    pass


class NotAnAnchor(HypergraphError):
    pass


class EdgesOverlap(HypergraphError):
    pass


class EdgeMissesVertex(HypergraphError):
    pass


class CertificateInvalid(HypergraphError):
    pass


class MalformedGadgetTraversal(HypergraphError):
    pass


class TraversalConditionUnmet(HypergraphError):
    pass


class NoCertificate(HypergraphError):
    pass


class BudgetExceeded(HypergraphError):
    pass


class BadSpec(HypergraphError):
    pass


class HgrSyntaxError(HypergraphError):
    """Malformed .hgr document; carries the offending 1-based line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class IndexOutOfRange(HgrSyntaxError):
    pass


class CountMismatch(HypergraphError):
    pass


class DecisionMismatch(HypergraphError):
    """Two solver strategies disagreed on the same instance; indicates a bug."""
