import unittest
from fractions import Fraction as Fr

from okounkov.core.geometry import convex_hull, is_subset, volume
from okounkov.errors import NonDelzantError, OutOfRangeError, PreconditionError
from okounkov.services.semigroup_engine import check_dimension_partition, v_split, volume_limit_estimate
from okounkov.services.toric_bodies import (
    DelzantPolytope,
    ToricInput,
    barycentric_meeting_point,
    export_payload,
    jet_separation,
    toric_bodies,
    toric_oracle_export,
    toric_seshadri,
    toric_subdivision,
    toric_volume_check,
    vanishing_order,
    vertex_chart,
)
from okounkov.services.toric_corpus import SIMPLEX, SQUARE, named_input, random_corpus, toric_corpus


class TestCharts(unittest.TestCase):
    def setUp(self):
        self.P = DelzantPolytope.from_points(SIMPLEX)

    def test_vertices_in_lex_order(self):
        self.assertEqual(self.P.vertices, ((0, 0), (0, 1), (1, 0)))

    def test_chart_at_corner(self):
        chart = vertex_chart(self.P, 2)
        self.assertEqual(chart.inverse_basis, ((-1, -1), (0, 1)))
        self.assertEqual(chart.apply((Fr(1, 4), Fr(1, 2))), (Fr(1, 4), Fr(1, 2)))
        self.assertEqual(vertex_chart(self.P, 1).apply((Fr(1, 4), Fr(1, 4))), (Fr(1, 4), Fr(1, 2)))

    def test_vanishing_order_and_jets(self):
        self.assertEqual(vanishing_order(self.P, 0, (1, 0)), 1)
        self.assertEqual(vanishing_order(self.P, 2, (1, 0)), 0)
        self.assertEqual(jet_separation(DelzantPolytope.from_points([(0, 0), (3, 0), (3, 2), (0, 2)]), 0), 2)

    def test_non_delzant_vertex(self):
        P = DelzantPolytope.from_points([(0, 0), (2, 0), (0, 1)])
        self.assertFalse(P.is_delzant_at(1))
        self.assertTrue(P.is_delzant_at(2))
        with self.assertRaises(NonDelzantError):
            toric_bodies(ToricInput(P, (0, 1, 2)))

    def test_rational_vertices_rejected(self):
        with self.assertRaises(NonDelzantError):
            DelzantPolytope.from_points([(0, 0), (Fr(1, 2), 0), (0, 1)])

    def test_chosen_indices_follow_input_order(self):
        inp = ToricInput.from_points(SQUARE, [2])
        self.assertEqual(inp.polytope.vertices[inp.chosen[0]], (1, 1))
        with self.assertRaises(OutOfRangeError):
            ToricInput.from_points(SQUARE, [7])
        with self.assertRaises(PreconditionError):
            ToricInput.from_points(SQUARE, [0, 0])


class TestBodies(unittest.TestCase):
    def test_simplex_all_vertices(self):
        inp = named_input("simplex/3")
        bodies = toric_bodies(inp)
        quad = convex_hull([(0, 0), (Fr(1, 2), 0), (0, Fr(1, 2)), (Fr(1, 3), Fr(1, 3))])
        self.assertEqual(bodies[0].vertices, quad.vertices)
        self.assertEqual([volume(b) for b in bodies], [Fr(1, 6)] * 3)
        self.assertEqual(barycentric_meeting_point(inp), (Fr(1, 3), Fr(1, 3)))

    def test_square_all_vertices(self):
        bodies = toric_bodies(named_input("square/4"))
        quarter = convex_hull([(0, 0), (Fr(1, 2), 0), (0, Fr(1, 2)), (Fr(1, 2), Fr(1, 2))])
        for body in bodies:
            self.assertEqual(body.vertices, quarter.vertices)

    def test_single_vertex_gives_the_whole_polytope(self):
        inp = named_input("simplex/1")
        self.assertEqual(volume(toric_subdivision(inp)[0]), Fr(1, 2))
        self.assertIsNone(barycentric_meeting_point(inp))

    def test_volume_identity_on_corpus(self):
        for name, inp in toric_corpus(size=6):
            lhs, rhs, ok = toric_volume_check(inp)
            self.assertTrue(ok, name)
        self.assertEqual(toric_volume_check(named_input("square/2-opposite"))[:2], (2, 2))

    def test_cube(self):
        bodies = toric_bodies(named_input("cube/8"))
        self.assertEqual(sum(volume(b) for b in bodies), 1)


class TestSeshadriClosedForm(unittest.TestCase):
    def test_named_values(self):
        expected = {
            "square/4": Fr(1, 2),
            "simplex/3": Fr(1, 2),
            "simplex/1": 1,
            "square/1": 1,
            "square/2-opposite": 1,
            "square/2-adjacent": Fr(1, 2),
            "rectangle/4": Fr(1, 2),
        }
        for name, value in expected.items():
            self.assertEqual(toric_seshadri(named_input(name)), value, name)

    def test_half_integer_on_random_corpus(self):
        for name, inp in random_corpus(seed=7, size=10):
            self.assertEqual((2 * toric_seshadri(inp)).denominator, 1, name)


class TestOracle(unittest.TestCase):
    def test_square_levels(self):
        data = toric_oracle_export(named_input("square/4"), 4)
        self.assertEqual([v.entries for v in v_split(data, 0, 2)], [(0, 0)])
        self.assertEqual(volume_limit_estimate(data, 0, [2, 4]), [(2, Fr(1, 4)), (4, Fr(1, 4))])
        for k in range(1, 5):
            self.assertTrue(check_dimension_partition(data, k))

    def test_section_counts(self):
        data = toric_oracle_export(named_input("simplex/3"), 3)
        self.assertEqual(dict(data.h0), {k: (k + 1) * (k + 2) // 2 for k in range(1, 4)})

    def test_level_hulls_sit_inside_bodies(self):
        inp = named_input("simplex/3")
        data = toric_oracle_export(inp, 6)
        bodies = toric_bodies(inp)
        for j, body in enumerate(bodies):
            points = [tuple(Fr(x, 6) for x in v.entries) for v in v_split(data, j, 6)]
            self.assertTrue(is_subset(convex_hull(points), body))

    def test_export_payload(self):
        payload = export_payload(toric_oracle_export(named_input("simplex/1"), 1))
        self.assertEqual(payload["N"], 1)
        self.assertEqual(payload["h0"], {"1": 3})
        self.assertEqual(sorted(payload["levels"]["1"]), [[[0, 0]], [[0, 1]], [[1, 0]]])


class TestCorpus(unittest.TestCase):
    def test_seeded_corpus_is_reproducible(self):
        first = [inp.polytope.vertices for _, inp in random_corpus(seed=3, size=8)]
        second = [inp.polytope.vertices for _, inp in random_corpus(seed=3, size=8)]
        self.assertEqual(first, second)

    def test_random_polygons_are_delzant(self):
        for name, inp in random_corpus(seed=11, size=15):
            P = inp.polytope
            self.assertTrue(all(P.is_delzant_at(v) for v in range(len(P.vertices))), name)
            self.assertTrue(all(0 <= x <= 6 for v in P.vertices for x in v), name)


if __name__ == "__main__":
    unittest.main()
