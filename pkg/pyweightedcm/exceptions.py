"""Weighted CM exceptions."""


class WeightedCMError(Exception):
    """Weighted edge ideal toolkit exception."""


class GraphDocumentError(WeightedCMError):
    """Malformed graph document."""


class LoopError(GraphDocumentError):
    """Edge joins a vertex to itself."""


class DuplicateEdgeError(GraphDocumentError):
    """Edge listed twice."""


class InvalidWeightError(GraphDocumentError):
    """Weight is not an integer in range."""


class DanglingEndpointError(GraphDocumentError):
    """Edge endpoint is not a declared vertex."""


class UnknownVertexError(WeightedCMError):
    """Vertex is not in the graph."""


class SizeBoundError(WeightedCMError):
    """Graph too large for exhaustive enumeration."""


class BudgetExceededError(WeightedCMError):
    """Search or face budget exhausted."""


class NotAFiveCycleError(WeightedCMError):
    """Sequence is not an induced 5-cycle of the graph."""


class PCWitnessError(WeightedCMError):
    """PC witness does not describe the graph."""


class LevelError(WeightedCMError):
    """Cover level defined off its support."""


class NotSquarefreeError(WeightedCMError):
    """Squarefree monomial ideal expected."""


class GeneratorError(WeightedCMError):
    """Random construction gave up."""
