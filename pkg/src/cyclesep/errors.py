"""Exception hierarchy.

Input problems derive from :class:`EmbeddingError` (CLI exit code 2),
broken internal guarantees from :class:`InternalError` (exit code 4).
"""

from __future__ import annotations


class SeparatorError(Exception):
    """Base class for every error raised by this package."""


# ---------------------------------------------------------------------------
# Input / validation errors
# ---------------------------------------------------------------------------


class EmbeddingError(SeparatorError):
    """The input does not describe a valid embedded maximal planar graph."""


class ParseError(EmbeddingError):
    pass


class TooSmall(EmbeddingError):
    pass


class NotSymmetric(EmbeddingError):
    """Adjacency is not symmetric, or has self-loops / repeated neighbors."""


class NotTriangulated(EmbeddingError):
    pass


class EulerViolation(EmbeddingError):
    pass


class Disconnected(EmbeddingError):
    pass


class BadOuterFace(EmbeddingError):
    pass


class BadSeedPath(SeparatorError):
    pass


class SingleNode(SeparatorError):
    """A one-node tree has no edge to cut."""


class ParityViolation(SeparatorError):
    pass


class NotSimple(SeparatorError):
    pass


class NoConvergence(SeparatorError):
    pass


# ---------------------------------------------------------------------------
# Internal guarantees
# ---------------------------------------------------------------------------


class InternalError(SeparatorError):
    """An invariant the construction relies on did not hold."""


class TraceFailure(InternalError):
    pass


class LadderEmpty(InternalError):
    pass


class DegenerateIntersection(InternalError):
    pass


class InternalContradiction(InternalError):
    pass
