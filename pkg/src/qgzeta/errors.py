"""Exception hierarchy shared by every qgzeta module."""

from __future__ import annotations


class QGZetaError(Exception):
    """Base class for all errors raised by qgzeta."""


# graph construction

class GraphError(QGZetaError, ValueError):
    pass


class EmptyGraph(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class Disconnected(GraphError):
    pass


# numerics

class DomainError(QGZetaError, ValueError):
    """Argument outside the domain where an evaluator is defined."""


class PoleError(DomainError):
    pass


class PoleAtOne(PoleError):
    pass


class PoleAtHalf(PoleError):
    pass


class PoleAtNonpositiveInteger(PoleError):
    pass


class OrderTooLarge(DomainError):
    pass


class EigensolverFailure(QGZetaError, ArithmeticError):
    pass


class NoConvergence(QGZetaError, ArithmeticError):
    pass


class DegenerateDeterminant(QGZetaError, ArithmeticError):
    pass
