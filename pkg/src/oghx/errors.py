"""Exception types shared across the package."""


class OghxError(Exception):
    """Base class for all package errors."""


class ParamOutOfRange(OghxError):
    """A numeric parameter violates a documented precondition."""


class ArityMismatch(OghxError):
    """An edge has the wrong number of vertices, or two objects disagree on r."""


class VertexOutOfRange(OghxError):
    """An edge mentions a vertex outside [0, n)."""


class NotStrictlyIncreasing(OghxError):
    """An edge's vertex sequence is not strictly increasing."""


class DuplicateEdge(OghxError):
    """The same edge was supplied twice (duplicates are an error, never merged)."""


class ArityTooSmall(OghxError):
    """Operation needs r >= 2 (e.g. shadows of 1-uniform hypergraphs)."""


class NotCyclic(OghxError):
    """Operation is defined only for cyclically ordered hypergraphs."""


class OrderKindMismatch(OghxError):
    """Host and pattern carry different order kinds."""


class IsolatedVertex(OghxError):
    """A pattern vertex occurs in no edge."""


class PatternTooLarge(OghxError):
    """The pattern has more vertices than the host."""


class OutOfTheoremRange(OghxError):
    """Closed-form value requested outside the range where it is exact."""


class EmptySizes(OghxError):
    """An interval-size list is empty."""


class PhaseOutOfRange(OghxError):
    """Ending-edge dynamic program asked for a path longer than r edges."""


class PreconditionViolated(OghxError):
    """An engine-verified precondition (e.g. pattern-freeness) does not hold."""


class OutOfMemory(OghxError):
    """Instance exceeds the documented desk-scale memory guard."""


class ParseError(OghxError):
    """Malformed hypergraph file; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
