"""
Immutable finite simple graphs.

Every operation returns a new graph; nothing here mutates its input, so
graphs can be shared freely between threads and used as memo keys.

Vocab:
  S(x): unit sphere, the graph induced on the neighbours of x.
  B(x): unit ball, S(x) together with x.
  Join G + H: disjoint union plus every edge between G and H.
"""
import hashlib
import logging
from collections import Counter

import networkx as nx

from .errors import InvalidVertex

log = logging.getLogger(__name__)

# Tags of vertices produced by joins and disjoint unions
LEFT = 'L'
RIGHT = 'R'


def vertex_key(vertex):
    """
    Sort key giving a total order on mixed vertex identifiers.

    Integers sort before strings, strings before tuples; tuples compare
    element-wise, so simplex tuples of a refinement stay comparable.
    """
    if isinstance(vertex, bool):
        raise TypeError("Boolean vertex identifiers are not supported")
    if isinstance(vertex, int):
        return (0, vertex)
    if isinstance(vertex, str):
        return (1, vertex)
    if isinstance(vertex, tuple):
        return (2, tuple(vertex_key(part) for part in vertex))
    raise TypeError("Unsupported vertex identifier: %r" % (vertex,))


def sort_vertices(vertices):
    "Deterministic vertex order"
    return tuple(sorted(vertices, key=vertex_key))


class Graph:
    """
    Finite simple graph with a deterministic vertex order.

    Adjacency is symmetric and irreflexive. Vertices are ints, strings or
    tuples of those.
    """

    __slots__ = ('_vertices', '_adj', '_index', '_canonical', '_nx', '_hash')

    def __init__(self, vertices=(), edges=()):
        adj = {}
        for vertex in vertices:
            vertex_key(vertex)
            adj[vertex] = set()

        for a, b in edges:
            if a == b:
                raise ValueError("Self-loop at %r" % (a,))
            if a not in adj:
                raise InvalidVertex(a)
            if b not in adj:
                raise InvalidVertex(b)
            adj[a].add(b)
            adj[b].add(a)

        self._setup({v: frozenset(n) for v, n in adj.items()})

    @classmethod
    def _from_adjacency(cls, adj):
        "Trusted constructor - adjacency already symmetric and frozen"
        graph = cls.__new__(cls)
        graph._setup(adj)
        return graph

    def _setup(self, adj):
        self._vertices = sort_vertices(adj)
        self._adj = adj
        self._index = None
        self._canonical = None
        self._nx = None
        self._hash = None

    @classmethod
    def from_edges(cls, edges, vertices=()):
        "Build a graph from an edge list, adding endpoints as vertices"
        all_vertices = set(vertices)
        edges = list(edges)
        for a, b in edges:
            all_vertices.add(a)
            all_vertices.add(b)
        return cls(all_vertices, edges)

    @property
    def vertices(self):
        return self._vertices

    @property
    def edges(self):
        "Every edge once, endpoints in vertex order, sorted"
        order = self.index
        result = []
        for a in self._vertices:
            for b in self._adj[a]:
                if order[a] < order[b]:
                    result.append((a, b))
        result.sort(key=lambda e: (order[e[0]], order[e[1]]))
        return tuple(result)

    @property
    def index(self):
        "Map vertex -> position in the deterministic order"
        if self._index is None:
            self._index = {v: i for i, v in enumerate(self._vertices)}
        return self._index

    def neighbors(self, vertex):
        try:
            return self._adj[vertex]
        except (KeyError, TypeError):
            raise InvalidVertex(vertex) from None

    def degree(self, vertex):
        return len(self.neighbors(vertex))

    def has_edge(self, a, b):
        return b in self.neighbors(a)

    def edge_count(self):
        return sum(len(n) for n in self._adj.values()) // 2

    def is_empty(self):
        return not self._vertices

    def adjacency(self):
        "Read-only adjacency mapping vertex -> frozenset of neighbours"
        return self._adj

    def to_networkx(self):
        "Frozen networkx view, built once"
        if self._nx is None:
            graph = nx.Graph()
            graph.add_nodes_from(self._vertices)
            graph.add_edges_from(self.edges)
            self._nx = nx.freeze(graph)
        return self._nx

    def relabel(self, mapping):
        "Rename vertices; mapping must be injective on the vertex set"
        adj = {}
        for vertex, nbrs in self._adj.items():
            adj[mapping[vertex]] = frozenset(mapping[n] for n in nbrs)
        if len(adj) != len(self._adj):
            raise ValueError("Relabeling is not injective")
        return Graph._from_adjacency(adj)

    def __len__(self):
        return len(self._vertices)

    def __iter__(self):
        return iter(self._vertices)

    def __contains__(self, vertex):
        try:
            return vertex in self._adj
        except TypeError:
            return False

    def __eq__(self, other):
        "Identical graphs - same vertex identifiers, same edges"
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._vertices, self.edges))
        return self._hash

    def __repr__(self):
        "Format for debugging"
        s = "<Graph |V|={} |E|={} {}>"
        shown = list(self._vertices[:6])
        return s.format(len(self), self.edge_count(),
                        shown if len(self) <= 6 else shown + ['...'])


def _check_subset(g, subset):
    subset = set(subset)
    for vertex in subset:
        if vertex not in g:
            raise InvalidVertex(vertex) from None
    return subset


def induced_subgraph(g, subset):
    "Graph on `subset` with every edge of g having both ends in it"
    subset = _check_subset(g, subset)
    adj = g.adjacency()
    return Graph._from_adjacency({
        v: adj[v] & subset
        for v in subset
    })


def unit_sphere(g, x):
    "S(x) - induced on the neighbours of x, x excluded"
    return induced_subgraph(g, g.neighbors(x))


def unit_ball(g, x):
    "B(x) - induced on x and its neighbours"
    return induced_subgraph(g, g.neighbors(x) | {x})


def delete_vertex(g, x):
    "G - x"
    if x not in g:
        raise InvalidVertex(x)
    adj = g.adjacency()
    return Graph._from_adjacency({
        v: nbrs - {x}
        for v, nbrs in adj.items()
        if v != x
    })


def fresh_vertex(g, base):
    "`base` or base + (k,) for the first k making it unused in g"
    candidate = base
    counter = 1
    while candidate in g:
        candidate = base + (counter,)
        counter += 1
    return candidate


def cone(g, over, apex=None):
    """
    g plus one new vertex joined to exactly the vertices in `over`.

    Returns (graph, apex).
    """
    over = _check_subset(g, over)
    if apex is None:
        apex = fresh_vertex(g, ('cone',))
    elif apex in g:
        raise ValueError("Cone apex %r already in the graph" % (apex,))
    adj = {
        v: nbrs | {apex} if v in over else nbrs
        for v, nbrs in g.adjacency().items()
    }
    adj[apex] = frozenset(over)
    return Graph._from_adjacency(adj), apex


def _tagged(g, tag):
    return {
        (tag, v): frozenset((tag, n) for n in nbrs)
        for v, nbrs in g.adjacency().items()
    }


def disjoint_union(g, h):
    "Tagged disjoint union without cross edges"
    adj = _tagged(g, LEFT)
    adj.update(_tagged(h, RIGHT))
    return Graph._from_adjacency(adj)


def join(g, h):
    """
    Join g + h: tagged disjoint union plus all edges between the parts.

    Vertices become ('L', v) and ('R', w) so the provenance of derived
    vertices stays readable.
    """
    left = _tagged(g, LEFT)
    right = _tagged(h, RIGHT)
    left_set = frozenset(left)
    right_set = frozenset(right)
    adj = {v: nbrs | right_set for v, nbrs in left.items()}
    adj.update({v: nbrs | left_set for v, nbrs in right.items()})
    return Graph._from_adjacency(adj)


def connected_components(g):
    "Maximal connected induced subgraphs, ordered by smallest vertex"
    parts = [
        sort_vertices(component)
        for component in nx.connected_components(g.to_networkx())
    ]
    parts.sort(key=lambda part: vertex_key(part[0]))
    return [induced_subgraph(g, part) for part in parts]


def is_connected(g):
    return len(g) > 0 and len(connected_components(g)) == 1


##
# Named graphs
##

def empty_graph():
    "The (-1)-sphere"
    return Graph()


def complete_graph(n):
    return Graph(range(n), [(a, b) for a in range(n) for b in range(a + 1, n)])


def cycle_graph(n):
    assert n >= 3
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)])


def wheel_graph(n):
    "Cycle C_n on 1..n with a center 0"
    edges = [(0, i) for i in range(1, n + 1)]
    edges += [(i, i % n + 1) for i in range(1, n + 1)]
    return Graph(range(n + 1), edges)


def zero_sphere():
    "Two non-adjacent points"
    return Graph([0, 1])


def cross_polytope(d):
    """
    The d-dimensional cross-polytope: join of d+1 copies of S^0.

    Vertices are ('+', i) and ('-', i); x is adjacent to everything but
    its antipode.
    """
    vertices = [(sign, i) for i in range(d + 1) for sign in '+-']
    edges = [
        (a, b)
        for a in vertices for b in vertices
        if vertex_key(a) < vertex_key(b) and a[1] != b[1]
    ]
    return Graph(vertices, edges)


##
# Canonical form
##

class CanonicalForm:
    """
    Exact isomorphism invariant.

    digest: sha256 over the canonical adjacency code; equal iff isomorphic.
    certificate: vertex -> canonical label 0..n-1.
    """

    __slots__ = ('digest', 'certificate', 'code')

    def __init__(self, digest, certificate, code):
        self.digest = digest
        self.certificate = certificate
        self.code = code

    @property
    def hex(self):
        return self.digest.hex()

    def inverse(self):
        "Canonical label -> vertex"
        return {label: vertex for vertex, label in self.certificate.items()}

    def __eq__(self, other):
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        return self.digest == other.digest

    def __hash__(self):
        return hash(self.digest)

    def __repr__(self):
        return "<CanonicalForm %s n=%d>" % (self.hex[:16], len(self.certificate))


def _refine(adj, cells):
    """
    Equitable refinement of an ordered partition.

    Every round splits all cells by the multiset of neighbour cell indices;
    the order of new cells depends only on those signatures, never on
    vertex names.
    """
    while True:
        cell_of = {}
        for i, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = i

        refined = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            signature = {}
            for v in cell:
                counts = Counter(cell_of[u] for u in adj[v])
                signature[v] = tuple(sorted(counts.items()))
            groups = sorted(set(signature.values()))
            if len(groups) > 1:
                split = True
                for group in groups:
                    refined.append([v for v in cell if signature[v] == group])
            else:
                refined.append(cell)
        cells = refined
        if not split:
            return cells


def _twins(adj, u, v):
    "Swapping u and v is an automorphism fixing everything else"
    return adj[u] - {v} == adj[v] - {u}


class _Labeler:
    """
    Individualization-refinement search for the least adjacency code of
    one connected graph.

    Leaves with equal codes yield automorphisms; children of a node that
    lie in one orbit of the automorphisms fixing the node's path give
    identical subtrees and only the first is searched.
    """

    # Automorphisms kept for orbit pruning
    MAX_AUTOMORPHISMS = 64

    def __init__(self, adj):
        self.adj = adj
        self.best_code = None
        self.best_labels = None
        self.automorphisms = []
        self.leaves = 0

    def leaf(self, cells):
        self.leaves += 1
        labels = {cell[0]: i for i, cell in enumerate(cells)}
        code = []
        for v, nbrs in self.adj.items():
            lv = labels[v]
            for u in nbrs:
                lu = labels[u]
                if lv < lu:
                    code.append((lv, lu))
        code.sort()
        code = tuple(code)
        if self.best_code is None or code < self.best_code:
            self.best_code = code
            self.best_labels = labels
        elif code == self.best_code and len(self.automorphisms) < self.MAX_AUTOMORPHISMS:
            vertex_at = {label: v for v, label in self.best_labels.items()}
            self.automorphisms.append({v: vertex_at[label] for v, label in labels.items()})

    def orbits(self, path):
        "Orbit root of every moved vertex under the automorphisms fixing path"
        parent = {}

        def find(u):
            root = u
            while parent.get(root, root) != root:
                root = parent[root]
            while u != root:
                parent[u], u = root, parent[u]
            return root

        for gamma in self.automorphisms:
            if any(gamma[p] != p for p in path):
                continue
            for u, image in gamma.items():
                a, b = find(u), find(image)
                if a != b:
                    parent[a] = b
        return {u: find(u) for u in parent}

    def search(self, cells, path):
        cells = _refine(self.adj, cells)

        target = None
        for i, cell in enumerate(cells):
            if len(cell) > 1 and (target is None or len(cell) < len(cells[target])):
                target = i

        if target is None:
            self.leaf(cells)
            return

        cell = cells[target]
        explored = []
        orbit = {}
        known = 0
        for v in sort_vertices(cell):
            # Twins in one cell give identical subtrees
            if any(_twins(self.adj, v, r) for r in explored):
                continue
            if len(self.automorphisms) != known:
                known = len(self.automorphisms)
                orbit = self.orbits(path)
            root = orbit.get(v, v)
            if any(orbit.get(u, u) == root for u in explored):
                continue
            explored.append(v)
            rest = [u for u in cell if u != v]
            self.search(cells[:target] + [[v], rest] + cells[target + 1:], path + [v])


def _component_code(adj, vertices):
    "(code, labels, leaves) of one connected component"
    by_degree = {}
    for v in vertices:
        by_degree.setdefault(len(adj[v]), []).append(v)
    cells = [by_degree[degree] for degree in sorted(by_degree)]

    labeler = _Labeler({v: adj[v] for v in vertices})
    labeler.search(cells, [])
    return labeler.best_code, labeler.best_labels, labeler.leaves


def canonical_form(g):
    """
    Exact canonical labeling of g, memoised on the graph object.

    Components are labeled on their own: each starts from its degree
    partition, refines to an equitable partition, then individualizes
    the vertices of the smallest non-singleton cell in turn, keeping the
    least edge code over all leaves. Components are then placed in order
    of (size, code).
    """
    if g._canonical is not None:
        return g._canonical

    adj = g.adjacency()
    parts = []
    leaves = 0
    for component in nx.connected_components(g.to_networkx()):
        code, labels, explored = _component_code(adj, sort_vertices(component))
        parts.append((len(labels), code, labels))
        leaves += explored
    parts.sort(key=lambda part: (part[0], part[1]))

    certificate = {}
    code = []
    offset = 0
    for size, part_code, labels in parts:
        for v, label in labels.items():
            certificate[v] = offset + label
        code.extend((a + offset, b + offset) for a, b in part_code)
        offset += size
    code = tuple(code)

    if leaves > 1000:
        log.debug("Canonical form of %r explored %d leaves", g, leaves)

    payload = repr((len(g), code)).encode('ascii')
    digest = hashlib.sha256(payload).digest()
    g._canonical = CanonicalForm(digest, certificate, code)
    return g._canonical


def canonical_graph(g):
    "g relabeled by its certificate; depends only on the isomorphism class"
    return g.relabel(canonical_form(g).certificate)


def is_isomorphic(g, h):
    if len(g) != len(h) or g.edge_count() != h.edge_count():
        return False
    return canonical_form(g).digest == canonical_form(h).digest
