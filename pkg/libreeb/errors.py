"""
Exceptions raised by libreeb.

Recognition itself never raises on a tight budget - it answers Unknown.
Everything that needs a definite answer converts that into BudgetExhausted.
"""


class ReebError(Exception):
    "Base of every error raised by the library"


class InvalidVertex(ReebError):
    "Vertex is not part of the graph"

    def __init__(self, vertex):
        super().__init__("Unknown vertex: %r" % (vertex,))
        self.vertex = vertex


class LevelOnVertex(ReebError):
    "Level parameter c equals a value taken by the coloring"

    def __init__(self, level):
        super().__init__("Level %s is in the image of the coloring" % level)
        self.level = level


class NotLocallyInjective(ReebError):
    "Coloring takes the same value on both ends of an edge"

    def __init__(self, edge, value=None):
        msg = "Coloring is not locally injective on edge %r - %r" % tuple(edge)
        if value is not None:
            msg += " (both %s)" % value
        super().__init__(msg)
        self.edge = tuple(edge)
        self.value = value


class NotAManifoldWithBoundary(ReebError):
    "Some unit sphere is neither a (d-1)-sphere nor a (d-1)-ball"


class EmptyFactor(ReebError):
    "Cartesian product with the empty graph is left undefined"


class NotRefinableEdge(ReebError):
    "Edge refinement precondition or post-check failed"


class PreconditionFailed(ReebError):
    "Operation called outside of its hypothesis"


class NotADGraph(PreconditionFailed):
    "Graph is not a d-graph"


class NotASphere(PreconditionFailed):
    "Graph is not a d-sphere"


class NotABall(PreconditionFailed):
    "Graph is not a d-ball"


class BudgetExhausted(ReebError):
    "Recognition ran out of search nodes where a definite answer was needed"


class ConstructionBug(ReebError):
    "Internal invariant violated - a construction failed its own verification"


class GraphFormatError(ReebError):
    "Malformed Graph or Coloring JSON"

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = "%s (line %d, column %d)" % (message, line, column)
        super().__init__(message)
        self.line = line
        self.column = column


class RecipeError(ReebError):
    "Malformed generator recipe"

    def __init__(self, message, position):
        super().__init__("%s at position %d" % (message, position))
        self.position = position
