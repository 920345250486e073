import unittest
from unittest import mock

from .. import fixtures
from ..complex import Coloring, barycentric_refinement, boundary, sublevel_set
from ..errors import NotABall, NotADGraph, NotASphere, PreconditionFailed
from ..graph_core import (
    complete_graph,
    cross_polytope,
    cycle_graph,
    delete_vertex,
    wheel_graph,
)
from ..morse import critical_points
from ..reeb import (
    build_reeb_function,
    certify_sphere_via_reeb,
    cone_extension,
    foliate,
    reeb_function_on_ball,
    sublevel_ball,
)
from ..recognition import Answer, TopologyVerdict
from . import colorings, recognizer


def sphere_fixtures():
    "(name, graph, d) for every sphere the construction is checked on"
    return [
        ('C4', cycle_graph(4), 1),
        ('C7', cycle_graph(7), 1),
        ('octahedron', cross_polytope(2), 2),
        ('icosahedron', fixtures.icosahedron(), 2),
        ('sixteen-cell', cross_polytope(3), 3),
        ('B-octahedron', barycentric_refinement(cross_polytope(2)), 2),
    ]


class ReebSphereTestCase(unittest.TestCase):

    def setUp(self):
        self.rec = recognizer()

    def test_two_critical_points(self):
        "Test the construction gives exactly two critical vertices"
        for name, g, d in sphere_fixtures():
            function = build_reeb_function(g, d, recognizer=self.rec)
            self.assertEqual(len(function.critical_vertices), 2, name)
            self.assertTrue(function.coloring.is_injective())

            # Independent per-vertex classification
            found = critical_points(g, function.coloring, d, recognizer=self.rec)
            self.assertEqual(set(found), set(function.critical_vertices), name)

    def test_chosen_start(self):
        "Test any vertex of a sphere can be the minimum"
        for g, d in ((fixtures.icosahedron(), 2), (cross_polytope(2), 2), (cross_polytope(3), 3)):
            for start in g:
                function = build_reeb_function(g, d, start=start, recognizer=self.rec)
                self.assertEqual(function.critical_vertices[0], start)
                self.assertEqual(function.collapse_order[0], start)
                found = critical_points(g, function.coloring, d, recognizer=self.rec)
                self.assertEqual(len(found), 2)

    def test_not_a_sphere(self):
        "Test tori and balls are rejected"
        with self.assertRaises(NotASphere):
            build_reeb_function(fixtures.grid_torus(), 2, recognizer=self.rec)
        with self.assertRaises(NotASphere):
            build_reeb_function(wheel_graph(5), 2, recognizer=self.rec)
        with self.assertRaises(PreconditionFailed):
            build_reeb_function(cycle_graph(5), 1, start=42, recognizer=self.rec)

    def test_certify(self):
        "Test certification accepts Reeb functions and rejects others"
        g = cross_polytope(2)
        function = build_reeb_function(g, 2, recognizer=self.rec)
        verdict = certify_sphere_via_reeb(g, function.coloring, 2, recognizer=self.rec)
        self.assertIs(verdict.answer, Answer.YES)
        self.assertEqual(set(verdict.witness), set(function.critical_vertices))

        torus = fixtures.grid_torus()
        for f in colorings(torus, 5):
            verdict = certify_sphere_via_reeb(torus, f, 2, recognizer=self.rec)
            self.assertIs(verdict.answer, Answer.NO)
            self.assertGreaterEqual(len(verdict.witness), 3)

        g = fixtures.GALLERY['torus-join-k1']()
        with self.assertRaises(NotADGraph):
            certify_sphere_via_reeb(g, Coloring({v: i for i, v in enumerate(g)}), 3,
                                    recognizer=self.rec)

    def test_certify_every_sphere(self):
        "Test built functions certify every sphere fixture"
        for name, g, d in sphere_fixtures():
            function = build_reeb_function(g, d, recognizer=self.rec)
            verdict = certify_sphere_via_reeb(g, function.coloring, d, recognizer=self.rec)
            self.assertIs(verdict.answer, Answer.YES, name)

    def test_certify_undecided_cross_check(self):
        "Test an undecided sphere cross-check leaves the certificate undecided"
        g = cross_polytope(2)
        function = build_reeb_function(g, 2, recognizer=self.rec)
        undecided = TopologyVerdict(Answer.UNKNOWN)
        with mock.patch.object(self.rec, 'is_sphere', return_value=undecided):
            verdict = certify_sphere_via_reeb(g, function.coloring, 2, recognizer=self.rec)
        self.assertIs(verdict.answer, Answer.UNKNOWN)
        self.assertEqual(set(verdict.witness), set(function.critical_vertices))


class ReebBallTestCase(unittest.TestCase):

    def setUp(self):
        self.rec = recognizer()

    def test_balls(self):
        "Test balls carry a function with two critical points"
        balls = [
            (wheel_graph(5), 2),
            (wheel_graph(4), 2),
            (fixtures.GALLERY['ball3'](), 3),
            (delete_vertex(fixtures.icosahedron(), 11), 2),
            (delete_vertex(cycle_graph(6), 0), 1),
        ]
        for g, d in balls:
            function = reeb_function_on_ball(g, d, recognizer=self.rec)
            self.assertEqual(len(set(function.critical_vertices)), 2)
            found = critical_points(g, function.coloring, d, recognizer=self.rec)
            self.assertEqual(set(found), set(function.critical_vertices))

    def test_point(self):
        "Test K1 has a degenerate function"
        function = reeb_function_on_ball(complete_graph(1), 0, recognizer=self.rec)
        self.assertTrue(function.degenerate)
        self.assertEqual(function.critical_vertices, (0, 0))

    def test_not_a_ball(self):
        with self.assertRaises(NotABall):
            reeb_function_on_ball(fixtures.glued_wheels(), 2, recognizer=self.rec)
        with self.assertRaises(NotABall):
            reeb_function_on_ball(cross_polytope(2), 2, recognizer=self.rec)


class FoliationTestCase(unittest.TestCase):

    def setUp(self):
        self.rec = recognizer()

    def test_sphere_levels(self):
        "Test every level of a Reeb function on a sphere is a sphere"
        for name, g, d in sphere_fixtures()[:5]:
            function = build_reeb_function(g, d, recognizer=self.rec)
            foliation = foliate(g, function.coloring, d, recognizer=self.rec)
            self.assertEqual(len(foliation), len(g) - 1)
            expected = "%d-sphere" % (d - 1)
            for verdict in foliation.verdicts():
                self.assertIn(verdict, ('empty', expected), name)

    def test_ball_levels(self):
        "Test every level of a ball Reeb function is a ball"
        for g in (wheel_graph(5), wheel_graph(4)):
            function = reeb_function_on_ball(g, 2, recognizer=self.rec)
            foliation = foliate(g, function.coloring, 2, recognizer=self.rec)
            for verdict in foliation.verdicts():
                self.assertIn(verdict, ('empty', '1-ball'))

    def test_torus_levels(self):
        "Test some level of a torus coloring is not a circle"
        g = fixtures.grid_torus()
        for f in colorings(g, 3, seed=4):
            verdicts = foliate(g, f, 2, recognizer=self.rec).verdicts()
            self.assertTrue(any(v not in ('empty', '1-sphere') for v in verdicts))

    def test_rejects(self):
        g = fixtures.GALLERY['torus-join-k1']()
        with self.assertRaises(NotADGraph):
            foliate(g, Coloring({v: i for i, v in enumerate(g)}), 3, recognizer=self.rec)


class SublevelBallTestCase(unittest.TestCase):

    def setUp(self):
        self.rec = recognizer()

    def check(self, g, k_vertices, d):
        ball, sphere = sublevel_ball(g, k_vertices, d, recognizer=self.rec)
        self.assertTrue(self.rec.is_ball(ball, d).yes)
        self.assertTrue(self.rec.is_sphere(sphere, d - 1).yes)

        # The other side of the level sphere is a ball too
        inside = set(k_vertices)
        f = Coloring({v: -1 if v in inside else 1 for v in g})
        outside = sublevel_set(g, f.negated(), 0)
        self.assertTrue(self.rec.is_ball(outside, d).yes)
        self.assertEqual(boundary(outside, d, recognizer=self.rec), sphere)

    def test_contractible_sets(self):
        "Test contractible sets grow into balls with sphere boundaries"
        ico = fixtures.icosahedron()
        octahedron = cross_polytope(2)
        sixteen = cross_polytope(3)
        cases = [
            (ico, fixtures.figure_path(), 2),
            (ico, [0], 2),
            (ico, [0, 1], 2),
            (ico, [0, 1, 2], 2),
            (ico, [6, 1, 0, 3], 2),
            (ico, [0, 1, 6, 11], 2),
            (octahedron, [('+', 0)], 2),
            (octahedron, [('+', 0), ('+', 1), ('-', 0)], 2),
            (sixteen, [('+', 0)], 3),
            (sixteen, [('+', 0), ('+', 1)], 3),
        ]
        for g, k_vertices, d in cases:
            self.check(g, k_vertices, d)

    def test_outside_not_checked_off_spheres(self):
        "Test a torus still gives a ball around a point"
        g = fixtures.grid_torus()
        x = g.vertices[0]
        ball, sphere = sublevel_ball(g, [x], 2, recognizer=self.rec)
        self.assertTrue(self.rec.is_ball(ball, 2).yes)
        self.assertTrue(self.rec.is_sphere(sphere, 1).yes)

    def test_rejects(self):
        "Test K must be contractible"
        with self.assertRaises(PreconditionFailed):
            sublevel_ball(cross_polytope(2), [('+', 0), ('-', 0)], 2, recognizer=self.rec)


class ConeTestCase(unittest.TestCase):

    def test_cone_over_boundary(self):
        "Test coning off a ball's boundary gives a sphere"
        g = wheel_graph(6)
        completed = cone_extension(g, range(1, 7))
        self.assertTrue(recognizer().is_sphere(completed, 2).yes)
        self.assertEqual(len(completed), 8)
