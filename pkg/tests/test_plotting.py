import unittest
from fractions import Fraction as Fr

from okounkov.core.geometry import Polytope, convex_hull
from okounkov.errors import GeometryError
from okounkov.services.plotting import body_svgs, plot_subdivision, plot_svg, simplex_overlay
from okounkov.services.toric_bodies import toric_subdivision
from okounkov.services.toric_corpus import named_input

SIMPLEX = convex_hull([(0, 0), (1, 0), (0, 1)])
QUAD = convex_hull([(0, 0), (Fr(1, 2), 0), (0, Fr(1, 2)), (Fr(1, 3), Fr(1, 3))])


class TestPlotting(unittest.TestCase):
    def test_svg_output(self):
        svg = plot_svg([QUAD], ["body 0"], overlay=simplex_overlay(Fr(1, 2)))
        self.assertIn("<svg", svg)
        self.assertIn("(1/3, 1/3)", svg)
        self.assertIn("simplex fit", svg)

    def test_deterministic(self):
        self.assertEqual(body_svgs([SIMPLEX], Fr(1, 2)), body_svgs([SIMPLEX], Fr(1, 2)))

    def test_empty_body(self):
        self.assertIn("empty", plot_svg([Polytope.empty(2)]))

    def test_subdivision(self):
        inp = named_input("square/4")
        svg = plot_subdivision(inp.polytope.base, toric_subdivision(inp), inp.polytope.vertices)
        self.assertIn("cell 3", svg)

    def test_non_planar(self):
        cube = convex_hull([(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)])
        with self.assertRaises(GeometryError):
            plot_svg([cube])

    def test_overlay_only_for_positive_xi(self):
        self.assertIsNone(simplex_overlay(Fr(0)))


if __name__ == "__main__":
    unittest.main()
