"""
Gallery of named graphs with recipes and expected invariants.

Expected values carry a provenance tag:
  stated: a known value for this object in the literature.
  derived: follows by a short argument from the definitions.
  measured: observed with this toolkit and pinned as a regression value.
"""
from .complex import barycentric_refinement, cartesian_product
from .graph_core import (
    Graph,
    complete_graph,
    cross_polytope,
    cycle_graph,
    delete_vertex,
    empty_graph,
    join,
    wheel_graph,
)

STATED = 'stated'
DERIVED = 'derived'
MEASURED = 'measured'


def icosahedron():
    """
    0 is the top, 1..5 the upper ring, 6..10 the lower ring, 11 the bottom.

    Upper i touches lower 5 + i and 5 + (i mod 5) + 1.
    """
    edges = [(0, i) for i in range(1, 6)]
    edges += [(i, i % 5 + 1) for i in range(1, 6)]
    edges += [(5 + i, 5 + i % 5 + 1) for i in range(1, 6)]
    for i in range(1, 6):
        edges.append((i, 5 + i))
        edges.append((i, 5 + i % 5 + 1))
    edges += [(11, 5 + i) for i in range(1, 6)]
    return Graph(range(12), edges)


def figure_path():
    "Contractible, not a ball: the path 6-1-0-3-9 inside the icosahedron"
    return [6, 1, 0, 3, 9]


def glued_wheels():
    """
    Two 5-wheels sharing the boundary edge 1-2.

    First wheel: center 0, rim 1..5. Second: center 6, rim 1-2-7-8-9.
    """
    edges = [(0, i) for i in range(1, 6)]
    edges += [(i, i % 5 + 1) for i in range(1, 6)]
    rim = [1, 2, 7, 8, 9]
    edges += [(6, v) for v in rim]
    edges += [(rim[i], rim[(i + 1) % 5]) for i in range(5)]
    return Graph(range(10), edges)


def grid_torus(n=4):
    "n x n grid on Z_n x Z_n with one diagonal per square; links are C_6"
    vertices = [(i, j) for i in range(n) for j in range(n)]
    edges = []
    for i, j in vertices:
        edges.append(((i, j), ((i + 1) % n, j)))
        edges.append(((i, j), (i, (j + 1) % n)))
        edges.append(((i, j), ((i + 1) % n, (j + 1) % n)))
    return Graph(vertices, edges)


def octahedron():
    return cross_polytope(2)


def sixteen_cell():
    return cross_polytope(3)


def _k1():
    return complete_graph(1)


# Named graphs usable in recipes besides the Cn, Kn, Pn, Wn, Sd families
GALLERY = {
    'empty': empty_graph,
    'octahedron': octahedron,
    'sixteen-cell': sixteen_cell,
    'icosahedron': icosahedron,
    'icosahedron-minus-vertex': lambda: delete_vertex(icosahedron(), 11),
    'octahedron-minus-vertex': lambda: delete_vertex(octahedron(), ('-', 2)),
    'glued-wheels': glued_wheels,
    'ball3': lambda: join(octahedron(), _k1()),
    'torus4x4': grid_torus,
    'torus-c4xc4': lambda: cartesian_product(cycle_graph(4), cycle_graph(4)),
    'torus-join-k1': lambda: join(grid_torus(), _k1()),
    'B-octahedron': lambda: barycentric_refinement(octahedron()),
}


class FixtureManifest:
    """
    Recipe, directly built reference graph and expected invariants.

    expected maps an invariant name to (value, provenance). Verdict
    invariants are named '<kind>:<d>' and hold 'yes' or 'no'.
    """

    def __init__(self, name, recipe, reference, expected, dim=None, note=None):
        self.name = name
        self.recipe = recipe
        self.reference = reference
        self.expected = expected
        self.dim = dim
        self.note = note

    def build(self):
        "Graph from the recipe"
        # pylint: disable=import-outside-toplevel
        from .recipe import generate
        return generate(self.recipe)

    def verdicts(self):
        "(kind, d, answer) triples from the expected invariants"
        found = []
        for key, (value, _) in self.expected.items():
            if ':' in key:
                kind, d = key.split(':')
                found.append((kind, int(d), value))
        return found

    def __repr__(self):
        return "<FixtureManifest %s recipe=%r>" % (self.name, self.recipe)


def _manifests():
    return [
        FixtureManifest('S0', 'S0', lambda: Graph([0, 1]), {
            'chi': (2, STATED), 'betti': ([2], DERIVED), 'sphere:0': ('yes', STATED),
        }, dim=0),
        FixtureManifest('C4', 'S0 + S0', lambda: cycle_graph(4), {
            'chi': (0, STATED), 'betti': ([1, 1], DERIVED),
            'sphere:1': ('yes', DERIVED), 'contractible:0': ('no', DERIVED),
        }, dim=1),
        FixtureManifest('C7', 'C7', lambda: cycle_graph(7), {
            'chi': (0, STATED), 'sphere:1': ('yes', DERIVED),
        }, dim=1),
        FixtureManifest('octahedron', 'S0 + S0 + S0', octahedron, {
            'chi': (2, STATED), 'betti': ([1, 0, 1], DERIVED),
            'sphere:2': ('yes', DERIVED), 'dgraph:2': ('yes', DERIVED),
        }, dim=2),
        FixtureManifest('sixteen-cell', 'octahedron + S0', sixteen_cell, {
            'chi': (0, STATED), 'betti': ([1, 0, 0, 1], DERIVED),
            'sphere:3': ('yes', DERIVED), 'dgraph:3': ('yes', DERIVED),
        }, dim=3),
        FixtureManifest('icosahedron', 'icosahedron', icosahedron, {
            'chi': (2, STATED), 'sphere:2': ('yes', DERIVED),
        }, dim=2),
        FixtureManifest('W5', 'W5', lambda: wheel_graph(5), {
            'chi': (1, DERIVED), 'sphere:2': ('no', DERIVED),
            'ball:2': ('yes', DERIVED), 'dgraph-boundary:2': ('yes', DERIVED),
            'wu': (1, DERIVED),
        }, dim=2),
        FixtureManifest('octahedron-minus-vertex', 'octahedron-minus-vertex',
                        lambda: wheel_graph(4), {
                            'chi': (1, DERIVED), 'contractible:0': ('yes', STATED),
                            'ball:2': ('yes', DERIVED),
                        }, dim=2),
        FixtureManifest('glued-wheels', 'glued-wheels', glued_wheels, {
            'chi': (1, DERIVED), 'dgraph-boundary:2': ('yes', STATED),
            'ball:2': ('no', STATED),
        }, dim=2),
        FixtureManifest('ball3', 'cone(octahedron)', lambda: join(octahedron(), _k1()), {
            'chi': (1, DERIVED), 'ball:3': ('yes', DERIVED), 'wu': (-1, STATED),
        }, dim=3),
        FixtureManifest('B-octahedron', 'B(octahedron)',
                        lambda: barycentric_refinement(octahedron()), {
                            'vertices': (26, DERIVED), 'chi': (2, DERIVED),
                            'sphere:2': ('yes', DERIVED),
                        }, dim=2),
        FixtureManifest('torus-c4xc4', 'C4 × C4',
                        lambda: cartesian_product(cycle_graph(4), cycle_graph(4)), {
                            'vertices': (64, DERIVED), 'chi': (0, DERIVED),
                            'betti': ([1, 2, 1], DERIVED),
                            'dgraph:2': ('yes', DERIVED), 'sphere:2': ('no', DERIVED),
                        }, dim=2),
        FixtureManifest('torus4x4', 'torus4x4', grid_torus, {
            'vertices': (16, DERIVED), 'chi': (0, DERIVED), 'betti': ([1, 2, 1], DERIVED),
            'dgraph:2': ('yes', DERIVED),
        }, dim=2),
        FixtureManifest('torus-join-k1', 'torus4x4 + K1', lambda: join(grid_torus(), _k1()), {
            'chi': (1, STATED), 'betti': ([1, 0, 0, 0], STATED),
            'contractible:0': ('yes', STATED), 'dgraph:3': ('no', STATED),
            'wu': (1, DERIVED),
        }, dim=3, note="unit sphere of the apex is a 2-torus; not a manifold with "
                       "boundary, so wu is not chi minus chi of a boundary"),
    ]


MANIFESTS = {manifest.name: manifest for manifest in _manifests()}


def get_manifest(name):
    try:
        return MANIFESTS[name]
    except KeyError:
        raise KeyError("No fixture named %r" % name) from None
