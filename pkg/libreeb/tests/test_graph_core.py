import os
import unittest
from itertools import combinations, permutations

import numpy as np

from ..errors import InvalidVertex
from ..graph_core import (
    Graph,
    canonical_form,
    canonical_graph,
    complete_graph,
    cone,
    connected_components,
    cross_polytope,
    cycle_graph,
    delete_vertex,
    disjoint_union,
    empty_graph,
    fresh_vertex,
    induced_subgraph,
    is_connected,
    is_isomorphic,
    join,
    path_graph,
    sort_vertices,
    unit_ball,
    unit_sphere,
    wheel_graph,
    zero_sphere,
)


def all_graphs(n):
    "Every labelled simple graph on range(n)"
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(range(n), [pair for i, pair in enumerate(pairs) if mask >> i & 1])


def brute_force_code(g):
    "Least sorted edge list over all vertex permutations"
    best = None
    for perm in permutations(range(len(g))):
        code = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in g.edges))
        if best is None or code < best:
            best = code
    return best


class GraphTestCase(unittest.TestCase):

    def test_construction(self):
        "Test edges are stored once, symmetric and sorted"
        g = Graph([2, 0, 1], [(1, 0), (2, 1)])
        self.assertEqual(g.vertices, (0, 1, 2))
        self.assertEqual(g.edges, ((0, 1), (1, 2)))
        self.assertTrue(g.has_edge(1, 0))
        self.assertEqual(g.degree(1), 2)
        self.assertEqual(g.edge_count(), 2)

        with self.assertRaises(ValueError):
            Graph([0], [(0, 0)])
        with self.assertRaises(InvalidVertex):
            Graph([0], [(0, 1)])
        with self.assertRaises(InvalidVertex):
            g.neighbors(7)

    def test_mixed_identifiers(self):
        "Test ints sort before strings, strings before tuples"
        self.assertEqual(sort_vertices([('a', 1), 'b', 3, 'a', (0,)]),
                         (3, 'a', 'b', (0,), ('a', 1)))
        with self.assertRaises(TypeError):
            Graph([True])

    def test_equality_and_hash(self):
        "Test identical graphs compare and hash equal"
        a = Graph.from_edges([(0, 1), (1, 2)])
        b = Graph([0, 1, 2], [(2, 1), (0, 1)])
        self.assertEqual(a, b)
        self.assertEqual(hash(a), hash(b))
        self.assertNotEqual(a, path_graph(4))

    def test_unit_sphere_and_ball(self):
        "Test S(x) excludes x and B(x) includes it"
        g = wheel_graph(5)
        self.assertEqual(unit_sphere(g, 0), induced_subgraph(g, range(1, 6)))
        self.assertTrue(is_isomorphic(unit_sphere(g, 0), cycle_graph(5)))
        self.assertEqual(unit_ball(g, 0), g)
        self.assertEqual(len(unit_sphere(g, 1)), 3)

        with self.assertRaises(InvalidVertex):
            induced_subgraph(g, [0, 42])

    def test_delete_vertex(self):
        "Test G - x keeps the rest intact"
        g = delete_vertex(wheel_graph(4), 0)
        self.assertEqual(g, Graph(range(1, 5), [(1, 2), (2, 3), (3, 4), (4, 1)]))
        with self.assertRaises(InvalidVertex):
            delete_vertex(g, 0)

    def test_join(self):
        "Test the join of two 0-spheres is C4"
        g = join(zero_sphere(), zero_sphere())
        self.assertEqual(len(g), 4)
        self.assertEqual(g.edge_count(), 4)
        self.assertTrue(is_isomorphic(g, cycle_graph(4)))
        self.assertIn(('L', 0), g)
        self.assertIn(('R', 1), g)

        # Join with the empty graph is the identity up to tagging
        self.assertTrue(is_isomorphic(join(cycle_graph(5), empty_graph()), cycle_graph(5)))

    def test_disjoint_union(self):
        "Test disjoint union has no cross edges"
        g = disjoint_union(complete_graph(3), complete_graph(2))
        self.assertEqual(g.edge_count(), 4)
        parts = connected_components(g)
        self.assertEqual([len(p) for p in parts], [3, 2])
        self.assertFalse(is_connected(g))
        self.assertFalse(is_connected(empty_graph()))

    def test_cross_polytope(self):
        "Test cross-polytopes are iterated joins of 0-spheres"
        self.assertTrue(is_isomorphic(cross_polytope(1), cycle_graph(4)))
        octahedron = cross_polytope(2)
        self.assertEqual((len(octahedron), octahedron.edge_count()), (6, 12))
        self.assertTrue(is_isomorphic(octahedron,
                                      join(cross_polytope(1), zero_sphere())))
        self.assertEqual(cross_polytope(3).edge_count(), 24)

    def test_cone(self):
        "Test the cone apex sees exactly the chosen vertices"
        g, apex = cone(path_graph(3), [0, 2])
        self.assertEqual(apex, ('cone',))
        self.assertTrue(is_isomorphic(g, cycle_graph(4)))

        h, second = cone(g, g.vertices)
        self.assertEqual(second, ('cone', 1))
        self.assertEqual(h.degree(second), 4)
        with self.assertRaises(ValueError):
            cone(g, [0], apex=0)

    def test_fresh_vertex(self):
        "Test fresh vertices avoid existing identifiers"
        g = Graph([('m',), ('m', 1)])
        self.assertEqual(fresh_vertex(g, ('m',)), ('m', 2))
        self.assertEqual(fresh_vertex(g, ('n',)), ('n',))

    def test_relabel(self):
        "Test relabeling keeps structure and rejects collisions"
        g = path_graph(3).relabel({0: 'a', 1: 'b', 2: 'c'})
        self.assertEqual(g.edges, (('a', 'b'), ('b', 'c')))
        with self.assertRaises(ValueError):
            path_graph(3).relabel({0: 'a', 1: 'a', 2: 'c'})


class CanonicalFormTestCase(unittest.TestCase):

    def check_oracle(self, n):
        "Digests agree exactly when the brute-force codes agree"
        digest_of_code = {}
        code_of_digest = {}
        for g in all_graphs(n):
            code = brute_force_code(g)
            digest = canonical_form(g).digest
            self.assertEqual(digest_of_code.setdefault(code, digest), digest)
            self.assertEqual(code_of_digest.setdefault(digest, code), code)

    def test_oracle_small(self):
        "Test canonical forms against exhaustive permutation on up to 5 vertices"
        for n in range(0, 6):
            self.check_oracle(n)

    @unittest.skipUnless(os.environ.get('REEB_SLOW_TESTS') == '1',
                         "set REEB_SLOW_TESTS=1 for the 6-vertex oracle")
    def test_oracle_six(self):
        "Test canonical forms against exhaustive permutation on 6 vertices"
        self.check_oracle(6)

    def test_certificate(self):
        "Test the certificate is a bijection onto 0..n-1"
        g = wheel_graph(6)
        form = canonical_form(g)
        self.assertEqual(sorted(form.certificate.values()), list(range(len(g))))
        self.assertEqual(form.inverse()[form.certificate[0]], 0)
        self.assertEqual(len(form.hex), 64)

    def test_canonical_graph(self):
        "Test isomorphic graphs share one canonical relabeling"
        a = cycle_graph(6)
        b = a.relabel({i: (i * 5) % 6 for i in range(6)})
        c = cycle_graph(6).relabel({i: ('x', i) for i in range(6)})
        self.assertEqual(canonical_graph(a), canonical_graph(b))
        self.assertEqual(canonical_graph(a), canonical_graph(c))

    def test_regular_graphs(self):
        "Test regular graphs the degree partition cannot split"
        prism = Graph(range(6), [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3),
                                 (0, 3), (1, 4), (2, 5)])
        k33 = Graph(range(6), [(a, b) for a in range(3) for b in range(3, 6)])
        self.assertFalse(is_isomorphic(prism, k33))
        self.assertFalse(is_isomorphic(cycle_graph(6),
                                       disjoint_union(complete_graph(3), complete_graph(3))))
        self.assertTrue(is_isomorphic(cross_polytope(2),
                                      cross_polytope(2).relabel(
                                          {v: i for i, v in enumerate(reversed(
                                              cross_polytope(2).vertices))})))

    def test_empty(self):
        "Test the empty graph has a canonical form"
        self.assertEqual(canonical_form(empty_graph()).certificate, {})
        self.assertTrue(is_isomorphic(empty_graph(), Graph()))

    def test_relabeling_invariance(self):
        "Test digests survive random relabeling of random graphs"
        rng = np.random.default_rng(11)
        for _ in range(100):
            n = int(rng.integers(1, 11))
            pairs = list(combinations(range(n), 2))
            keep = rng.random(len(pairs)) < rng.random()
            g = Graph(range(n), [pair for pair, k in zip(pairs, keep) if k])
            perm = rng.permutation(n)
            h = g.relabel({v: ('v', int(perm[v])) for v in range(n)})
            self.assertEqual(canonical_form(g).digest, canonical_form(h).digest)
            self.assertEqual(canonical_graph(g), canonical_graph(h))

    def test_unions_of_cycles(self):
        "Test disjoint unions of cycles label component by component"
        parts = [cycle_graph(12), cycle_graph(16), cycle_graph(10)]
        a = disjoint_union(disjoint_union(parts[0], parts[1]), parts[2])
        b = disjoint_union(parts[2], disjoint_union(parts[1], parts[0]))
        self.assertTrue(is_isomorphic(a, b))
        self.assertFalse(is_isomorphic(a, disjoint_union(cycle_graph(22), cycle_graph(16))))

        triple = disjoint_union(disjoint_union(cycle_graph(8), cycle_graph(8)), cycle_graph(8))
        form = canonical_form(triple)
        self.assertEqual(sorted(form.certificate.values()), list(range(24)))
        self.assertFalse(is_isomorphic(triple, disjoint_union(cycle_graph(12), cycle_graph(12))))

        # Labels of one component are consecutive
        for part in connected_components(triple):
            labels = sorted(form.certificate[v] for v in part)
            self.assertEqual(labels, list(range(labels[0], labels[0] + 8)))

    def test_symmetric_graphs(self):
        "Test graphs with large automorphism groups"
        g = join(cycle_graph(7), cycle_graph(7))
        h = g.relabel({v: i for i, v in enumerate(reversed(g.vertices))})
        self.assertTrue(is_isomorphic(g, h))
        self.assertFalse(is_isomorphic(cycle_graph(40), disjoint_union(cycle_graph(20),
                                                                       cycle_graph(20))))


class IdentityTestCase(unittest.TestCase):

    def test_join_associative(self):
        "Test (A + B) + C is isomorphic to A + (B + C)"
        graphs = [empty_graph(), zero_sphere(), path_graph(3), cycle_graph(5), complete_graph(2)]
        for a in graphs:
            for b in graphs:
                for c in graphs[1:4]:
                    self.assertTrue(is_isomorphic(join(join(a, b), c), join(a, join(b, c))))

    def test_sphere_is_punctured_ball(self):
        "Test S(x) equals B(x) - x at every vertex"
        for g in (wheel_graph(5), cross_polytope(3), path_graph(4),
                  disjoint_union(cycle_graph(4), complete_graph(1))):
            for x in g:
                self.assertEqual(unit_sphere(g, x), delete_vertex(unit_ball(g, x), x))
