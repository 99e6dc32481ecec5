"""Exception hierarchy.

Everything a caller can trigger with bad input derives from
:class:`PreconditionError`; :class:`InternalInvariantViolation` is reserved
for states that the constructive proofs rule out, i.e. bugs.
"""


class HypergraphError(Exception):
    """Base class for all errors raised by this package."""


class PreconditionError(HypergraphError, ValueError):
    """Input or precondition failure (CLI exit code 2)."""


class DuplicateEdge(PreconditionError):
    pass


class EdgeSizeOutOfRange(PreconditionError):
    pass


class VertexOutOfRange(PreconditionError):
    pass


class RepeatedVertexInEdge(PreconditionError):
    pass


class EmptySubset(PreconditionError):
    pass


class IndexOutOfRange(PreconditionError, IndexError):
    pass


class InvalidCertificate(PreconditionError):
    pass


class NotCovering(PreconditionError):
    pass


class TooFewVertices(PreconditionError):
    pass


class NotThreeBounded(PreconditionError):
    """Hyperedges larger than 3 handed to a [3]-graph algorithm."""


class LengthOutOfRange(PreconditionError):
    pass


class CapExceeded(PreconditionError):
    pass


class DimensionMismatch(PreconditionError):
    pass


class NotUniform(PreconditionError):
    pass


class InvalidParameters(PreconditionError):
    pass


class PreconditionNotChecked(PreconditionError):
    pass


class NotRainbow(PreconditionError):
    pass


class ColoringMismatch(PreconditionError):
    pass


class InternalInvariantViolation(HypergraphError, RuntimeError):
    """A step that the underlying proof declares impossible has occurred.

    ``context`` carries a JSON-friendly diagnostic dump.
    """

    def __init__(self, message: str, context: dict | None = None):
        super().__init__(message)
        self.context = context or {}
