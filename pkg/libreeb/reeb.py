"""
Functions with exactly two critical points on spheres and balls.

A d-graph carries such a function iff it is a d-sphere. On a sphere it is
read off a puncture-and-collapse order; on a ball it is an order in which
every vertex but the first and the last sees contractible parts of its
unit sphere on both sides.
"""
import logging

from .complex import Coloring, boundary, format_rational, level_surface, sublevel_set
from .errors import (
    BudgetExhausted,
    ConstructionBug,
    NotABall,
    NotADGraph,
    NotASphere,
    PreconditionFailed,
)
from .graph_core import cone, delete_vertex, induced_subgraph
from .morse import classify_vertex
from .recognition import Answer, TopologyVerdict, get_recognizer

log = logging.getLogger(__name__)


def _definite(verdict, what):
    if verdict.answer is Answer.UNKNOWN:
        raise BudgetExhausted("Recognition budget exhausted while checking %s" % what)
    return verdict.yes


class ReebFunction:
    """
    Injective coloring with exactly two symmetric-critical vertices.

    collapse_order lists the vertices by increasing value.
    """

    def __init__(self, coloring, critical_vertices, collapse_order, degenerate=False):
        self.coloring = coloring
        self.critical_vertices = tuple(critical_vertices)
        self.collapse_order = list(collapse_order)
        # Single-vertex ball: one vertex is both extrema
        self.degenerate = degenerate

    def __repr__(self):
        return "<ReebFunction |V|=%d critical=%r>" % (len(self.collapse_order),
                                                       self.critical_vertices)


def _symmetric_critical(g, f, d, recognizer):
    found = []
    for x in g:
        report = classify_vertex(g, f, x, d, recognizer)
        if report.symmetric_critical is None:
            raise BudgetExhausted("Criticality of %r undecided within budget" % (x,))
        if report.symmetric_critical:
            found.append(x)
    return found


def _verified(g, d, order, recognizer):
    f = Coloring({x: k for k, x in enumerate(order)})
    critical = _symmetric_critical(g, f, d, recognizer)
    expected = {order[0], order[-1]}
    if set(critical) != expected or len(critical) != len(expected):
        raise ConstructionBug("Order %r gives critical vertices %r, expected %r"
                              % (order, critical, sorted(expected, key=order.index)))
    return ReebFunction(f, (order[0], order[-1]), order)


def build_reeb_function(g, d, start=None, recognizer=None):
    """
    f(x_k) = k along a puncture-then-collapse order of the sphere g.

    start forces the first vertex, which must leave g - start contractible.
    """
    recognizer = get_recognizer(None, recognizer)
    verdict = recognizer.is_sphere(g, d)
    if not _definite(verdict, "the %d-sphere hypothesis" % d):
        raise NotASphere("Graph is not a %d-sphere" % d)

    if start is None:
        order = list(verdict.witness)
    else:
        if start not in g:
            raise PreconditionFailed("Start vertex %r not in graph" % (start,))
        rest = recognizer.is_contractible(delete_vertex(g, start))
        if not _definite(rest, "the puncture at %r" % (start,)):
            raise PreconditionFailed("g - %r is not contractible" % (start,))
        order = [start] + list(rest.witness)

    log.debug("Reeb order on %r: %r", g, order)
    return _verified(g, d, order, recognizer)


def certify_sphere_via_reeb(g, f, d, recognizer=None):
    """
    Yes iff f has exactly two symmetric-critical vertices on the d-graph g.
    """
    recognizer = get_recognizer(None, recognizer)
    verdict = recognizer.is_dgraph(g, d)
    if verdict.answer is Answer.UNKNOWN:
        return verdict
    if not verdict.yes:
        raise NotADGraph("Graph is not a %d-graph: %s" % (d, verdict.obstruction))

    f.check_locally_injective(g)
    critical = []
    for x in g:
        report = classify_vertex(g, f, x, d, recognizer)
        if report.symmetric_critical is None:
            return TopologyVerdict(Answer.UNKNOWN, None, recognizer.spent)
        if report.symmetric_critical:
            critical.append(x)

    if len(critical) != 2:
        return TopologyVerdict(Answer.NO, critical, recognizer.spent,
                               "%d critical vertices" % len(critical))

    cross = recognizer.is_sphere(g, d)
    if cross.answer is Answer.NO:
        raise ConstructionBug("Two critical vertices but %r is not a %d-sphere" % (g, d))
    if cross.answer is Answer.UNKNOWN:
        return TopologyVerdict(Answer.UNKNOWN, critical, recognizer.spent,
                               "sphere cross-check undecided")
    return TopologyVerdict(Answer.YES, critical, recognizer.spent)


class FoliationLevel:
    "One level surface {f = c} and what it was recognised as"

    def __init__(self, c, surface, verdict):
        self.c = c
        self.surface = surface
        self.verdict = verdict

    def __repr__(self):
        return "<FoliationLevel c=%s %s |V|=%d>" % (format_rational(self.c),
                                                    self.verdict, len(self.surface))


class Foliation:
    "Level surfaces at the midpoints between consecutive values of f"

    def __init__(self, levels):
        self.levels = levels

    def verdicts(self):
        return [level.verdict for level in self.levels]

    def __len__(self):
        return len(self.levels)

    def __iter__(self):
        return iter(self.levels)

    def __repr__(self):
        return "<Foliation levels=%d>" % len(self.levels)


def _level_verdict(surface, d, recognizer):
    if surface.is_empty():
        return 'empty'
    unknown = False
    for kind, check in (('sphere', recognizer.is_sphere), ('ball', recognizer.is_ball)):
        verdict = check(surface, d - 1)
        if verdict.yes:
            return "%d-%s" % (d - 1, kind)
        unknown = unknown or verdict.answer is Answer.UNKNOWN
    return 'unknown' if unknown else 'other'


def foliate(g, f, d, recognizer=None):
    """
    Recognise every level surface of f on a d-graph or d-ball.
    """
    recognizer = get_recognizer(None, recognizer)
    if not _definite(recognizer.is_dgraph(g, d), "the %d-graph hypothesis" % d):
        if not _definite(recognizer.is_ball(g, d), "the %d-ball hypothesis" % d):
            raise NotADGraph("Graph is neither a %d-graph nor a %d-ball" % (d, d))

    f.check_total(g)
    levels = []
    for c in f.gaps():
        surface = level_surface(g, f, c)
        levels.append(FoliationLevel(c, surface, _level_verdict(surface, d, recognizer)))
    return Foliation(levels)


def sublevel_ball(g, k_vertices, d, recognizer=None):
    """
    The ball {f <= 0} in g' around a contractible K, f = -1 on K and 1 off it.

    Returns (ball, boundary sphere) after checking both and that the
    boundary of the ball is the level surface. When g is a d-sphere the
    other side {f >= 0} is checked to be a d-ball with the same boundary.
    """
    recognizer = get_recognizer(None, recognizer)
    if not _definite(recognizer.is_dgraph(g, d), "the %d-graph hypothesis" % d):
        raise NotADGraph("Graph is not a %d-graph" % d)

    k_graph = induced_subgraph(g, k_vertices)
    if not _definite(recognizer.is_contractible(k_graph), "contractibility of K"):
        raise PreconditionFailed("K is not contractible")

    inside = set(k_graph.vertices)
    f = Coloring({v: -1 if v in inside else 1 for v in g})
    ball = sublevel_set(g, f, 0)
    sphere = level_surface(g, f, 0)

    if not _definite(recognizer.is_ball(ball, d), "the sub-level ball"):
        raise ConstructionBug("{f <= 0} is not a %d-ball" % d)
    if not _definite(recognizer.is_sphere(sphere, d - 1), "the level sphere"):
        raise ConstructionBug("{f = 0} is not a %d-sphere" % (d - 1))
    if boundary(ball, d, recognizer=recognizer) != sphere:
        raise ConstructionBug("Boundary of {f <= 0} differs from {f = 0}")

    ambient = recognizer.is_sphere(g, d)
    if ambient.answer is Answer.UNKNOWN:
        log.info("Sphere check of the ambient graph undecided; {f >= 0} not checked")
    elif ambient.yes:
        outside = sublevel_set(g, f.negated(), 0)
        if not _definite(recognizer.is_ball(outside, d), "the super-level ball"):
            raise ConstructionBug("{f >= 0} is not a %d-ball" % d)
        if boundary(outside, d, recognizer=recognizer) != sphere:
            raise ConstructionBug("Boundary of {f >= 0} differs from {f = 0}")
    return ball, sphere


def cone_extension(g, over, apex=None):
    "g plus one new vertex joined to exactly `over`"
    extended, _ = cone(g, over, apex)
    return extended


class _BallOrder:
    """
    Depth-first search for a vertex order on a ball whose interior
    positions all have contractible lower and upper unit spheres.

    Placed sets known to be dead ends are remembered.
    """

    def __init__(self, g, preferred, recognizer):
        self.g = g
        rank = {v: i for i, v in enumerate(preferred)}
        self.vertices = sorted(g, key=lambda v: rank.get(v, len(rank)))
        self.recognizer = recognizer
        self.dead = set()
        self.steps = 0

    def contractible(self, vertices):
        verdict = self.recognizer.is_contractible(induced_subgraph(self.g, vertices))
        return _definite(verdict, "a ball order")

    def fits(self, v, placed):
        nbrs = self.g.neighbors(v)
        if not placed:
            return True
        below = nbrs & placed
        if len(placed) == len(self.g) - 1:
            return True
        above = nbrs - placed
        return self.contractible(below) and self.contractible(above)

    def enter(self, placed):
        "Iterator over the vertices to try next, or None at a known dead end"
        if frozenset(placed) in self.dead:
            return None
        self.steps += 1
        if self.steps > self.recognizer.budget:
            raise BudgetExhausted("Ball order search exceeded %d steps" % self.recognizer.budget)
        return iter(self.vertices)

    def search(self):
        "Depth-first over orders, one branch iterator per placed vertex"
        order = []
        placed = set()
        branches = [self.enter(placed)]
        while branches:
            if len(order) == len(self.g):
                return order
            branch = branches[-1]
            if branch is not None:
                for v in branch:
                    if v in placed or not self.fits(v, placed):
                        continue
                    order.append(v)
                    placed.add(v)
                    branches.append(self.enter(placed))
                    break
                else:
                    self.dead.add(frozenset(placed))
                    branch = None
            if branch is None:
                branches.pop()
                if order:
                    placed.discard(order.pop())
        return None


def reeb_function_on_ball(g, d, recognizer=None):
    """
    Two-critical-point function on a d-ball.

    The cone over the boundary is a d-sphere; its Reeb order started at
    the apex seeds the order in which candidates are tried on g.
    """
    recognizer = get_recognizer(None, recognizer)
    verdict = recognizer.is_ball(g, d)
    if not _definite(verdict, "the %d-ball hypothesis" % d):
        raise NotABall("Graph is not a %d-ball" % d)

    if d == 0:
        (only,) = g.vertices
        return ReebFunction(Coloring({only: 0}), (only, only), [only], degenerate=True)

    completed, apex = cone(g, verdict.witness)
    preferred = build_reeb_function(completed, d, start=apex,
                                    recognizer=recognizer).collapse_order[1:]

    order = _BallOrder(g, preferred, recognizer).search()
    if order is None:
        raise ConstructionBug("No two-critical-point order on the %d-ball %r" % (d, g))
    return _verified(g, d, order, recognizer)
