"""
Whitney complex of a graph and the constructions built on it.

The simplices of a graph are its complete subgraphs. Refinements, level
sets and products are again graphs whose vertices are simplex tuples, so
every result can be fed back into recognition.

Vocab:
  G': Barycentric refinement - simplices of G, adjacent when nested.
  {f < c}, {f = c}: sub-level set and level surface inside G'.
  B_f(x): center manifold, the level surface f = f(x) inside S(x)'.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import networkx as nx

from .errors import (
    BudgetExhausted,
    EmptyFactor,
    LevelOnVertex,
    NotAManifoldWithBoundary,
    NotLocallyInjective,
    NotRefinableEdge,
    PreconditionFailed,
)
from .graph_core import (
    Graph,
    fresh_vertex,
    induced_subgraph,
    sort_vertices,
    unit_sphere,
    vertex_key,
)
from .linalg import rank_gf2, rank_rational

log = logging.getLogger(__name__)


def as_rational(value):
    "Exact rational from an int, Fraction or 'p/q' string"
    if isinstance(value, bool):
        raise TypeError("Booleans are not coloring values")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError("Coloring values must be exact rationals, got %r" % (value,))


def format_rational(value):
    "Canonical 'p/q' or integer string"
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)


class Simplex:
    """
    Complete subgraph of a host graph, stored as its sorted vertex tuple.
    """

    __slots__ = ('vertices',)

    def __init__(self, vertices):
        assert vertices, "Simplices are nonempty"
        self.vertices = sort_vertices(vertices)

    @property
    def dim(self):
        return len(self.vertices) - 1

    @property
    def omega(self):
        "(-1)^dim"
        return -1 if self.dim % 2 else 1

    def issubset(self, other):
        return set(self.vertices) <= set(other.vertices)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, Simplex):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return "<Simplex dim=%d %r>" % (self.dim, self.vertices)


class Coloring:
    """
    Vertex function f with exact rational values.

    Morse-theoretic operations additionally require f to be locally
    injective; sub-level sets only need it to be total.
    """

    def __init__(self, values):
        self.values = {v: as_rational(x) for v, x in values.items()}

    def __getitem__(self, vertex):
        try:
            return self.values[vertex]
        except KeyError:
            raise PreconditionFailed("Coloring undefined at %r" % (vertex,)) from None

    def __contains__(self, vertex):
        return vertex in self.values

    def __len__(self):
        return len(self.values)

    def image(self):
        "Sorted distinct values"
        return sorted(set(self.values.values()))

    def gaps(self):
        "Midpoints between consecutive distinct values"
        image = self.image()
        return [(a + b) / 2 for a, b in zip(image, image[1:])]

    def restrict(self, vertices):
        return Coloring({v: self[v] for v in vertices})

    def negated(self):
        return Coloring({v: -x for v, x in self.values.items()})

    def check_total(self, g):
        for vertex in g:
            if vertex not in self.values:
                raise PreconditionFailed("Coloring undefined at %r" % (vertex,))

    def check_locally_injective(self, g, x=None):
        "Raise NotLocallyInjective on the first edge with equal values"
        if x is None:
            self.check_total(g)
            edges = g.edges
        else:
            edges = [(x, y) for y in sort_vertices(g.neighbors(x))]
        for a, b in edges:
            if self[a] == self[b]:
                raise NotLocallyInjective((a, b), format_rational(self[a]))

    def is_injective(self):
        return len(set(self.values.values())) == len(self.values)

    def __eq__(self, other):
        if not isinstance(other, Coloring):
            return NotImplemented
        return self.values == other.values

    def __repr__(self):
        return "<Coloring |V|=%d image=%d>" % (len(self.values), len(self.image()))


class FVector:
    "counts[k] = number of k-simplices"

    def __init__(self, counts):
        self.counts = list(counts)
        assert all(c >= 0 for c in self.counts)

    def euler(self):
        return sum(c if k % 2 == 0 else -c for k, c in enumerate(self.counts))

    def __eq__(self, other):
        if isinstance(other, FVector):
            return self.counts == other.counts
        return self.counts == list(other)

    def __repr__(self):
        return "<FVector %r>" % (tuple(self.counts),)


##
# Simplices and counting invariants
##

def _simplex_order(cell):
    return (len(cell), tuple(vertex_key(v) for v in cell))


@lru_cache(maxsize=4096)
def _cells(g):
    """
    All complete subgraphs as sorted tuples, by dimension then lexicographic.

    Maximal cliques come from networkx's Bron-Kerbosch with pivoting;
    every nonempty subset of a maximal clique is a simplex.
    """
    found = set()
    for clique in nx.find_cliques(g.to_networkx()):
        clique = sort_vertices(clique)
        for size in range(1, len(clique) + 1):
            found.update(combinations(clique, size))
    return tuple(sorted(found, key=_simplex_order))


def simplices(g):
    return [Simplex(cell) for cell in _cells(g)]


def f_vector(g):
    counts = []
    for cell in _cells(g):
        while len(counts) < len(cell):
            counts.append(0)
        counts[len(cell) - 1] += 1
    return FVector(counts)


def dimension(g):
    "Largest simplex dimension; -1 for the empty graph"
    cells = _cells(g)
    return len(cells[-1]) - 1 if cells else -1


def euler_characteristic(g):
    return f_vector(g).euler()


def wu_characteristic(g):
    """
    Sum of omega(x) omega(y) over ordered pairs of intersecting simplices.
    """
    index = g.index
    weighted = []
    for cell in _cells(g):
        mask = 0
        for v in cell:
            mask |= 1 << index[v]
        weighted.append((mask, -1 if len(cell) % 2 == 0 else 1))

    total = 0
    for mask_a, omega_a in weighted:
        for mask_b, omega_b in weighted:
            if mask_a & mask_b:
                total += omega_a * omega_b
    return total


def _boundary_columns(by_dim, k):
    "Signed boundary columns of the k-simplices in terms of (k-1)-faces"
    rows = {cell: i for i, cell in enumerate(by_dim[k - 1])}
    for cell in by_dim[k]:
        column = {}
        for i in range(len(cell)):
            face = cell[:i] + cell[i + 1:]
            column[rows[face]] = -1 if i % 2 else 1
        yield column


def betti_numbers(g, field='Q'):
    """
    Betti numbers of the Whitney complex.

    Ranks over the rationals are authoritative; field='GF2' is the fast
    path and agrees whenever there is no 2-torsion.
    """
    cells = _cells(g)
    if not cells:
        return []

    if field == 'Q':
        rank = rank_rational
    elif field == 'GF2':
        rank = rank_gf2
    else:
        raise ValueError("Unknown coefficient field %r" % (field,))

    top = len(cells[-1]) - 1
    by_dim = [[] for _ in range(top + 1)]
    for cell in cells:
        by_dim[len(cell) - 1].append(cell)

    # ranks[k] is the rank of the boundary map from k-chains
    ranks = [0] * (top + 2)
    for k in range(1, top + 1):
        ranks[k] = rank(_boundary_columns(by_dim, k))

    return [
        len(by_dim[k]) - ranks[k] - ranks[k + 1]
        for k in range(top + 1)
    ]


##
# Refinements and level sets
##

def barycentric_refinement(g):
    "G': simplices of g, adjacent when one contains the other"
    cells = _cells(g)
    adj = {cell: set() for cell in cells}
    for cell in cells:
        for size in range(1, len(cell)):
            for face in combinations(cell, size):
                adj[cell].add(face)
                adj[face].add(cell)
    return Graph._from_adjacency({v: frozenset(n) for v, n in adj.items()})


def _level_check(g, f, c):
    f.check_total(g)
    c = as_rational(c)
    if any(f[v] == c for v in g):
        raise LevelOnVertex(format_rational(c))
    return c


def sublevel_set(g, f, c):
    """
    {f <= c} inside G': simplices on which the minimum of f is below c.
    """
    c = _level_check(g, f, c)
    assert sublevel_rules_agree(g, f, c)
    refined = barycentric_refinement(g)
    chosen = [cell for cell in refined if min(f[v] for v in cell) < c]
    return induced_subgraph(refined, chosen)


def sublevel_rules_agree(g, f, c):
    """
    The min-rule equals "constant below c, or takes both signs of f - c".
    """
    c = _level_check(g, f, c)
    by_min = set()
    by_sign = set()
    for cell in _cells(g):
        values = [f[v] for v in cell]
        if min(values) < c:
            by_min.add(cell)
        if max(values) < c or min(values) < c < max(values):
            by_sign.add(cell)
    return by_min == by_sign


def level_surface(g, f, c):
    """
    {f = c} inside G': simplices on which f - c takes both signs.
    """
    c = _level_check(g, f, c)
    refined = barycentric_refinement(g)
    chosen = []
    for cell in refined:
        values = [f[v] for v in cell]
        if min(values) < c < max(values):
            chosen.append(cell)
    return induced_subgraph(refined, chosen)


def center_manifold(g, f, x):
    "B_f(x) = {f = f(x)} inside the refined unit sphere S(x)'"
    sphere = unit_sphere(g, x)
    f.check_locally_injective(g, x)
    return level_surface(sphere, f.restrict(sphere.vertices), f[x])


def dimension_coloring(refined):
    "f = dim on a Barycentric refinement; its vertices are simplex tuples"
    return Coloring({cell: len(cell) - 1 for cell in refined})


##
# Manifolds with boundary, products, edge refinement
##

def boundary(g, d, budget=None, recognizer=None):
    """
    delta G: induced on the vertices whose unit sphere is a (d-1)-ball.
    """
    # Recognition builds on this module; import only when needed.
    # pylint: disable=import-outside-toplevel
    from . import recognition

    answer, vertices = recognition.boundary_vertices(g, d, budget=budget,
                                                     recognizer=recognizer)
    if answer is recognition.Answer.UNKNOWN:
        raise BudgetExhausted("Boundary of %r: recognition budget exhausted" % (g,))
    if answer is recognition.Answer.NO:
        raise NotAManifoldWithBoundary(
            "Some unit sphere is neither a %d-sphere nor a %d-ball" % (d - 1, d - 1))
    return induced_subgraph(g, vertices)


def cartesian_product(g, h):
    """
    Product complex realised on simplex pairs.

    (x1, y1) ~ (x2, y2) when x1 <= x2 and y1 <= y2 or the other way round.
    """
    if g.is_empty() or h.is_empty():
        raise EmptyFactor("Cartesian product with the empty graph is undefined")

    cells_g = _cells(g)
    cells_h = _cells(h)
    faces_g = {x: [f for size in range(1, len(x) + 1) for f in combinations(x, size)]
               for x in cells_g}
    faces_h = {y: [f for size in range(1, len(y) + 1) for f in combinations(y, size)]
               for y in cells_h}

    adj = {(x, y): set() for x in cells_g for y in cells_h}
    for x2 in cells_g:
        for y2 in cells_h:
            top = (x2, y2)
            for x1 in faces_g[x2]:
                for y1 in faces_h[y2]:
                    low = (x1, y1)
                    if low != top:
                        adj[top].add(low)
                        adj[low].add(top)
    return Graph._from_adjacency({v: frozenset(n) for v, n in adj.items()})


def edge_refine(g, e, d, budget=None, recognizer=None):
    """
    Replace edge (a, b) by a midpoint m joined to a, b and S(a) & S(b).

    The common link must be a (d-2)-sphere and the result must again be a
    d-graph.
    """
    # pylint: disable=import-outside-toplevel
    from . import recognition

    a, b = e
    if a not in g or b not in g or not g.has_edge(a, b):
        raise NotRefinableEdge("%r is not an edge" % (tuple(e),))

    common = g.neighbors(a) & g.neighbors(b)
    link = induced_subgraph(g, common)
    verdict = recognition.is_sphere(link, d - 2, budget=budget, recognizer=recognizer)
    if verdict.answer is not recognition.Answer.YES:
        raise NotRefinableEdge("S(%r) & S(%r) is not a %d-sphere (%s)"
                               % (a, b, d - 2, verdict.answer.value))

    mid = fresh_vertex(g, ('refine', a, b))
    adj = {v: set(n) for v, n in g.adjacency().items()}
    adj[a].discard(b)
    adj[b].discard(a)
    adj[mid] = set(common) | {a, b}
    for v in adj[mid]:
        adj[v].add(mid)
    refined = Graph._from_adjacency({v: frozenset(n) for v, n in adj.items()})

    verdict = recognition.is_dgraph(refined, d, budget=budget, recognizer=recognizer)
    if verdict.answer is not recognition.Answer.YES:
        raise NotRefinableEdge("Refining %r does not give a %d-graph" % (tuple(e), d))
    log.debug("Refined edge %r with midpoint %r", tuple(e), mid)
    return refined
