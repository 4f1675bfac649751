"""Exception types shared across the package."""


class GlgError(Exception):
    """Base class for all package errors."""


class SchemaError(GlgError):
    """Malformed input data (JSON instance files, bad labels, loops)."""


class UnknownVertex(SchemaError):
    """An edge, arc or query referenced a vertex that is not in the graph."""


class VertexCollision(GlgError):
    """Two graphs that must be disjoint share vertex labels."""


class NotAClique(GlgError):
    """A vertex set that must induce a clique does not."""


class NotAnEdge(GlgError):
    """A vertex pair that must be an edge of the graph is not."""


class CyclicDigraph(GlgError):
    """The digraph contains a directed cycle.

    The offending cycle is attached as a vertex tuple.
    """

    def __init__(self, message, cycle=()):
        super().__init__(message)
        self.cycle = tuple(cycle)


# Alias used by the realization verifier.
NotAcyclic = CyclicDigraph


class CompetitionMismatch(GlgError):
    """A digraph's competition graph differs from the expected graph."""

    def __init__(self, message, missing=(), extra=()):
        super().__init__(message)
        self.missing = frozenset(missing)
        self.extra = frozenset(extra)


class InvalidInput(GlgError):
    """An operation received inputs violating its preconditions."""


class PreconditionViolated(InvalidInput):
    """A structural precondition of a construction does not hold."""


class HypothesisNotMet(GlgError):
    """The instance does not satisfy the hypotheses of the requested result."""


class EmptyGraph(GlgError):
    """The operation is undefined on a graph with no vertices."""


class SizeGuardExceeded(GlgError):
    """Exact computation refused: the input exceeds the size guard."""


class NonPositiveM(GlgError):
    """Cocktail party graphs require m >= 1."""


class NotConnected(InvalidInput):
    """The operation requires a connected graph."""


class BudgetExceeded(GlgError):
    """The exact search ran out of budget before reaching a conclusion.

    Carries the best bounds established so far (either may be None).
    """

    def __init__(self, message, lower_bound=None, upper_bound=None):
        super().__init__(message)
        self.lower_bound = lower_bound
        self.upper_bound = upper_bound


class ConstructionFailed(GlgError):
    """A construction's self-verification failed; this is an internal error."""
