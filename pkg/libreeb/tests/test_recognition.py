import os
import threading
import unittest
from unittest import mock

from .. import fixtures
from ..complex import barycentric_refinement
from ..graph_core import (
    Graph,
    complete_graph,
    cross_polytope,
    cycle_graph,
    delete_vertex,
    empty_graph,
    induced_subgraph,
    join,
    path_graph,
    wheel_graph,
    zero_sphere,
)
from ..recognition import (
    Answer,
    RecognitionCache,
    Recognizer,
    boundary_vertices,
    get_recognizer,
    replay_collapse,
    replay_sphere,
    shared_cache,
)
from . import recognizer


class ContractibleTestCase(unittest.TestCase):

    def setUp(self):
        self.rec = recognizer()

    def test_base_cases(self):
        "Test K1 is contractible and the empty graph is not"
        self.assertTrue(self.rec.is_contractible(complete_graph(1)).yes)
        self.assertEqual(self.rec.is_contractible(empty_graph()).answer, Answer.NO)
        self.assertFalse(self.rec.is_contractible(zero_sphere()).yes)

    def test_trees_and_cones(self):
        "Test paths, complete graphs and wheels are contractible"
        for g in (path_graph(6), complete_graph(5), wheel_graph(7)):
            verdict = self.rec.is_contractible(g)
            self.assertTrue(verdict.yes)
            self.assertTrue(replay_collapse(g, verdict.witness, self.rec))

    def test_cycles(self):
        "Test cycles are not contractible"
        for n in range(4, 9):
            verdict = self.rec.is_contractible(cycle_graph(n))
            self.assertEqual(verdict.answer, Answer.NO)
            self.assertIsNotNone(verdict.obstruction)

    def test_contractible_not_ball(self):
        "Test the 5-vertex path inside the icosahedron"
        ico = fixtures.icosahedron()
        k = induced_subgraph(ico, fixtures.figure_path())
        self.assertTrue(self.rec.is_contractible(k).yes)
        self.assertFalse(self.rec.is_ball(k, 2).yes)

    def test_replay_rejects_bad_orders(self):
        "Test witness replay catches wrong orders"
        g = path_graph(3)
        self.assertFalse(replay_collapse(g, [1, 0, 2], self.rec))
        self.assertFalse(replay_collapse(g, [0, 1], self.rec))
        self.assertTrue(replay_collapse(g, [0, 1, 2], self.rec))


class SphereTestCase(unittest.TestCase):

    def setUp(self):
        self.rec = recognizer()

    def test_minus_one_sphere(self):
        "Test the empty graph is the (-1)-sphere and nothing else is"
        self.assertTrue(self.rec.is_sphere(empty_graph(), -1).yes)
        self.assertFalse(self.rec.is_sphere(complete_graph(1), -1).yes)
        self.assertFalse(self.rec.is_sphere(empty_graph(), 0).yes)

    def test_cross_polytopes(self):
        "Test cross-polytopes are spheres of their dimension only"
        for d in range(0, 4):
            g = cross_polytope(d)
            verdict = self.rec.is_sphere(g, d)
            self.assertTrue(verdict.yes, d)
            self.assertTrue(replay_sphere(g, verdict.witness, d, self.rec))
            self.assertFalse(self.rec.is_sphere(g, d + 1).yes)

    def test_fixtures(self):
        "Test every fixture verdict"
        for manifest in fixtures.MANIFESTS.values():
            g = manifest.reference()
            for kind, d, expected in manifest.verdicts():
                verdict = self.rec.check(kind, g, d)
                self.assertEqual(verdict.answer.value, expected,
                                 "%s %s:%d" % (manifest.name, kind, d))

    def test_any_puncture(self):
        "Test every puncture of a sphere fixture leaves a contractible graph"
        for g in (cross_polytope(2), fixtures.icosahedron(), cross_polytope(3)):
            for x in g:
                self.assertTrue(self.rec.is_contractible(delete_vertex(g, x)).yes)

    def test_join_rule(self):
        "Test the join of a p-sphere and a q-sphere is a (p+q+1)-sphere"
        spheres = {
            -1: [empty_graph()],
            0: [zero_sphere()],
            1: [cycle_graph(4), cycle_graph(5)],
        }
        for p, left in spheres.items():
            for q, right in spheres.items():
                for a in left:
                    for b in right:
                        verdict = self.rec.is_sphere(join(a, b), p + q + 1)
                        self.assertTrue(verdict.yes, "%d-sphere * %d-sphere" % (p, q))

    def test_long_cycle(self):
        "Test large graphs are searched without deep recursion"
        g = cycle_graph(400)
        verdict = self.rec.is_sphere(g, 1)
        self.assertTrue(verdict.yes)
        self.assertTrue(replay_sphere(g, verdict.witness, 1, self.rec))
        self.assertTrue(self.rec.is_contractible(path_graph(500)).yes)

    @unittest.skipUnless(os.environ.get('REEB_SLOW_TESTS') == '1',
                         "set REEB_SLOW_TESTS=1 for the 362-vertex sphere")
    def test_twice_refined_icosahedron(self):
        g = barycentric_refinement(barycentric_refinement(fixtures.icosahedron()))
        self.assertEqual(len(g), 362)
        self.assertTrue(self.rec.is_sphere(g, 2).yes)

    def test_stack_exhaustion_is_unknown(self):
        "Test running out of stack gives an undecided verdict"
        with mock.patch.object(self.rec, '_sphere', side_effect=RecursionError):
            verdict = self.rec.is_sphere(cross_polytope(2), 2)
        self.assertIs(verdict.answer, Answer.UNKNOWN)
        self.assertEqual(self.rec.stats.unknowns, 1)

    def test_not_spheres(self):
        "Test tori and balls are not spheres"
        self.assertFalse(self.rec.is_sphere(fixtures.grid_torus(), 2).yes)
        self.assertFalse(self.rec.is_sphere(wheel_graph(5), 2).yes)
        self.assertFalse(self.rec.is_sphere(cycle_graph(3), 1).yes)


class BallTestCase(unittest.TestCase):

    def setUp(self):
        self.rec = recognizer()

    def test_zero_ball(self):
        self.assertTrue(self.rec.is_ball(complete_graph(1), 0).yes)
        self.assertFalse(self.rec.is_ball(zero_sphere(), 0).yes)

    def test_one_balls(self):
        "Test paths with at least three vertices are 1-balls"
        self.assertTrue(self.rec.is_ball(path_graph(3), 1).yes)
        self.assertTrue(self.rec.is_ball(path_graph(7), 1).yes)
        self.assertFalse(self.rec.is_ball(cycle_graph(5), 1).yes)

    def test_punctured_spheres(self):
        "Test a punctured sphere is a ball"
        for d in (1, 2, 3):
            g = delete_vertex(cross_polytope(d), ('+', 0))
            verdict = self.rec.is_ball(g, d)
            self.assertTrue(verdict.yes, d)
            self.assertEqual(len(verdict.witness), 2 * d)

    def test_boundary_vertices(self):
        "Test boundary vertices of a wheel are its rim"
        answer, vertices = boundary_vertices(wheel_graph(5), 2, recognizer=self.rec)
        self.assertIs(answer, Answer.YES)
        self.assertEqual(vertices, [1, 2, 3, 4, 5])

        answer, vertices = boundary_vertices(fixtures.GALLERY['torus-join-k1'](), 3,
                                             recognizer=self.rec)
        self.assertIs(answer, Answer.NO)
        self.assertIsNone(vertices)

    def test_dgraph_obstruction(self):
        "Test a No names the vertex whose unit sphere fails"
        verdict = self.rec.is_dgraph(fixtures.GALLERY['torus-join-k1'](), 3)
        self.assertEqual(verdict.answer, Answer.NO)
        self.assertIn("not a 2-sphere", verdict.obstruction)


class BudgetTestCase(unittest.TestCase):

    def test_unknown(self):
        "Test a tiny budget answers Unknown and caches nothing"
        rec = Recognizer(budget=2)
        verdict = rec.is_sphere(fixtures.icosahedron(), 2)
        self.assertIs(verdict.answer, Answer.UNKNOWN)
        self.assertIsNone(verdict.witness)
        self.assertEqual(rec.stats.unknowns, 1)

        # A later query with room to finish still succeeds
        rec.budget = 10 ** 6
        self.assertTrue(rec.is_sphere(fixtures.icosahedron(), 2).yes)

    def test_without_cache(self):
        "Test answers do not depend on the cache"
        cached = recognizer()
        plain = Recognizer(use_cache=False)
        self.assertIsNone(plain.cache)
        for g, d in ((cross_polytope(2), 2), (wheel_graph(5), 2), (cycle_graph(6), 1)):
            self.assertEqual(cached.is_sphere(g, d).answer, plain.is_sphere(g, d).answer)

    def test_fixtures_without_cache(self):
        "Test every fixture verdict agrees with and without the cache"
        cached = recognizer()
        plain = Recognizer(use_cache=False)
        for manifest in fixtures.MANIFESTS.values():
            g = manifest.build()
            for kind, d, expected in manifest.verdicts():
                name = "%s %s:%d" % (manifest.name, kind, d)
                first = cached.check(kind, g, d).answer
                self.assertEqual(first, plain.check(kind, g, d).answer, name)
                self.assertEqual(first.value, expected, name)
                # Second lookup is served from the cache
                self.assertEqual(cached.check(kind, g, d).answer, first, name)

    def test_as_dict(self):
        verdict = recognizer().is_contractible(path_graph(2))
        data = verdict.as_dict()
        self.assertEqual(data['answer'], 'yes')
        self.assertEqual(sorted(data['witness']), [0, 1])


class CacheTestCase(unittest.TestCase):

    def test_isomorphic_hits(self):
        "Test isomorphic graphs are answered from the cache"
        cache = RecognitionCache()
        first = Recognizer(cache=cache)
        self.assertTrue(first.is_sphere(cross_polytope(2), 2).yes)
        entries = len(cache)
        self.assertGreater(entries, 0)

        second = Recognizer(cache=cache)
        relabeled = cross_polytope(2).relabel(
            {v: i for i, v in enumerate(cross_polytope(2).vertices)})
        verdict = second.is_sphere(relabeled, 2)
        self.assertTrue(verdict.yes)
        self.assertGreater(second.stats.cache_hits, 0)
        # The witness is translated back to the new identifiers
        self.assertTrue(replay_sphere(relabeled, verdict.witness, 2, second))

        cache.clear()
        self.assertEqual(len(cache), 0)

    def test_shared_between_threads(self):
        "Test several recognizers agree on one cache"
        cache = RecognitionCache()
        results = []

        def work():
            rec = Recognizer(cache=cache)
            results.append(rec.is_sphere(fixtures.icosahedron(), 2).answer)

        threads = [threading.Thread(target=work) for _ in range(4)]
        for thread in threads:
            thread.start()
        for thread in threads:
            thread.join()
        self.assertEqual(results, [Answer.YES] * 4)

    def test_default_recognizer(self):
        "Test module level queries share one cache"
        self.assertIs(get_recognizer().cache, shared_cache())
        self.assertIs(shared_cache(), shared_cache())
        mine = recognizer()
        self.assertIs(get_recognizer(recognizer=mine), mine)

    def test_graph_identity(self):
        "Test a graph and its copy share cache entries"
        cache = RecognitionCache()
        rec = Recognizer(cache=cache)
        rec.is_contractible(Graph([0, 1, 2], [(0, 1), (1, 2)]))
        size = len(cache)
        rec.is_contractible(Graph(['a', 'b', 'c'], [('a', 'b'), ('b', 'c')]))
        self.assertEqual(len(cache), size)
