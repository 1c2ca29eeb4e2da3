import unittest
from fractions import Fraction as Fr

from hypothesis import given, settings, strategies as st

from okounkov.core.geometry import (
    ContainmentMode,
    Halfspace,
    Polytope,
    boundary_ring,
    centroid,
    contains,
    convex_hull,
    dilate,
    halfspace_intersection,
    intersection,
    is_subset,
    lattice_points,
    linear_image,
    minkowski_sum,
    slice_at,
    volume,
)
from okounkov.errors import DimensionMismatchError, EmptyPolytopeError, GeometryError, UnboundedPolytopeError

SIMPLEX = convex_hull([(0, 0), (1, 0), (0, 1)])
SQUARE = convex_hull([(0, 0), (1, 0), (1, 1), (0, 1)])

points_2d = st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)), min_size=1, max_size=8)
matrices_2d = st.tuples(
    st.tuples(st.integers(-3, 3), st.integers(-3, 3)), st.tuples(st.integers(-3, 3), st.integers(-3, 3))
).filter(lambda A: A[0][0] * A[1][1] != A[0][1] * A[1][0])
shifts_2d = st.tuples(st.fractions(-5, 5, max_denominator=7), st.fractions(-5, 5, max_denominator=7))


class TestConvexHull(unittest.TestCase):
    def test_interior_point_dropped(self):
        P = convex_hull([(0, 0), (1, 0), (0, 1), (Fr(1, 2), Fr(1, 4))])
        self.assertEqual(P.vertices, ((0, 0), (0, 1), (1, 0)))
        self.assertEqual(P.affine_dim, 2)

    def test_halfspaces_are_canonical(self):
        self.assertEqual(
            set(SIMPLEX.halfspaces),
            {Halfspace.make((-1, 0), 0), Halfspace.make((0, -1), 0), Halfspace.make((1, 1), 1)},
        )
        self.assertEqual(len(SIMPLEX.coordinate_facets), 2)
        # primitive integer normal
        self.assertEqual(Halfspace.make((Fr(1, 3), Fr(1, 3)), Fr(1, 9)), Halfspace.make((1, 1), Fr(1, 3)))

    def test_scaled_lattice_points_of_double_simplex(self):
        pts = [(Fr(x, 2), Fr(y, 2)) for x, y in lattice_points(SIMPLEX, 2)]
        self.assertEqual(len(pts), 6)
        self.assertEqual(convex_hull(pts).vertices, SIMPLEX.vertices)

    def test_lower_dimensional_hulls(self):
        segment = convex_hull([(0, 0), (1, 1), (2, 2)])
        self.assertEqual(segment.affine_dim, 1)
        self.assertEqual(segment.vertices, ((0, 0), (2, 2)))
        self.assertEqual(volume(segment), 0)
        point = convex_hull([(1, 2, 3)])
        self.assertEqual(point.affine_dim, 0)
        point.check_invariants()

    def test_cube_with_center(self):
        cube = [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]
        P = convex_hull(cube + [(Fr(1, 2), Fr(1, 2), Fr(1, 2))])
        self.assertEqual(len(P.vertices), 8)
        self.assertEqual(len(P.halfspaces), 6)
        self.assertEqual(volume(P), 1)
        self.assertEqual(centroid(P), (Fr(1, 2), Fr(1, 2), Fr(1, 2)))

    def test_simplex3_volume(self):
        P = convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
        self.assertEqual(volume(P), Fr(1, 6))
        self.assertEqual(len(P.coordinate_facets), 3)

    def test_mixed_dimensions_rejected(self):
        with self.assertRaises(DimensionMismatchError):
            convex_hull([(0, 0), (1, 0, 0)])
        with self.assertRaises(GeometryError):
            convex_hull([])

    @settings(max_examples=60, deadline=None)
    @given(points_2d)
    def test_hull_contains_inputs_and_round_trips(self, pts):
        P = convex_hull(pts)
        for p in pts:
            self.assertTrue(contains(P, p))
        P.check_invariants()
        self.assertEqual(convex_hull(P.vertices).vertices, P.vertices)

    @settings(max_examples=40, deadline=None)
    @given(points_2d, st.integers(1, 4))
    def test_dilation_scales_area(self, pts, k):
        P = convex_hull(pts)
        self.assertEqual(volume(dilate(P, k)), k * k * volume(P))


class TestHalfspaceIntersection(unittest.TestCase):
    def test_square(self):
        hs = [Halfspace.make(n, b) for n, b in (((1, 0), 1), ((-1, 0), 0), ((0, 1), 1), ((0, -1), 0))]
        self.assertEqual(halfspace_intersection(hs).vertices, SQUARE.vertices)

    def test_redundant_halfspace_dropped(self):
        hs = list(SIMPLEX.halfspaces) + [Halfspace.make((1, 0), 5)]
        self.assertEqual(halfspace_intersection(hs).halfspaces, SIMPLEX.halfspaces)

    def test_unbounded(self):
        with self.assertRaises(UnboundedPolytopeError):
            halfspace_intersection([Halfspace.make((1, 0), 1), Halfspace.make((0, 1), 1)])

    def test_empty(self):
        with self.assertRaises(EmptyPolytopeError):
            halfspace_intersection([Halfspace.make((1, 0), 0), Halfspace.make((-1, 0), -1)])


class TestMeasurements(unittest.TestCase):
    def test_volumes(self):
        self.assertEqual(volume(SIMPLEX), Fr(1, 2))
        self.assertEqual(volume(SQUARE), 1)
        self.assertEqual(volume(Polytope.empty(2)), 0)

    def test_centroid(self):
        self.assertEqual(centroid(SIMPLEX), (Fr(1, 3), Fr(1, 3)))
        with self.assertRaises(GeometryError):
            centroid(convex_hull([(0, 0), (1, 1)]))

    def test_slices(self):
        self.assertEqual(slice_at(SIMPLEX, 0, Fr(1, 2)).vertices, ((0,), (Fr(1, 2),)))
        tent = convex_hull([(0, 0), (Fr(1, 2), Fr(1, 2)), (1, 0)])
        self.assertEqual(slice_at(tent, 0, Fr(3, 4)).vertices, ((0,), (Fr(1, 4),)))
        self.assertTrue(slice_at(SIMPLEX, 0, 2).is_empty)

    def test_lattice_points(self):
        self.assertEqual(len(lattice_points(SQUARE, 3)), 16)
        self.assertEqual(len(lattice_points(SIMPLEX, 1)), 3)

    def test_simplex_lattice_counts(self):
        for k in range(1, 21):
            self.assertEqual(len(lattice_points(SIMPLEX, k)), (k + 1) * (k + 2) // 2, k)

    def test_boundary_ring_is_counter_clockwise(self):
        self.assertEqual(boundary_ring(SQUARE), [(0, 0), (1, 0), (1, 1), (0, 1)])


class TestMembership(unittest.TestCase):
    def test_closure_and_essential_interior(self):
        half = (Fr(1, 2), Fr(1, 2))
        self.assertTrue(contains(SIMPLEX, half))
        self.assertFalse(contains(SIMPLEX, half, ContainmentMode.ESSENTIAL_INTERIOR))
        # coordinate facets stay closed in essential-interior mode
        self.assertTrue(contains(SIMPLEX, (0, Fr(1, 2)), ContainmentMode.ESSENTIAL_INTERIOR))
        self.assertFalse(contains(Polytope.empty(2), (0, 0)))

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            contains(SIMPLEX, (0, 0, 0))


class TestTransformations(unittest.TestCase):
    def test_dilate_and_minkowski(self):
        self.assertEqual(dilate(SIMPLEX, 3).vertices, ((0, 0), (0, 3), (3, 0)))
        self.assertEqual(minkowski_sum(SQUARE, SQUARE).vertices, dilate(SQUARE, 2).vertices)

    def test_linear_image(self):
        image = linear_image(SIMPLEX, ((0, 1), (1, -1)), (0, 0))
        self.assertEqual(image.vertices, ((0, 0), (0, 1), (1, -1)))
        with self.assertRaises(GeometryError):
            linear_image(SIMPLEX, ((1, 1), (1, 1)), (0, 0))

    @settings(max_examples=60, deadline=None)
    @given(points_2d, matrices_2d, shifts_2d)
    def test_linear_image_scales_area_by_determinant(self, pts, A, b):
        P = convex_hull(pts)
        det = A[0][0] * A[1][1] - A[0][1] * A[1][0]
        self.assertEqual(volume(linear_image(P, A, b)), abs(det) * volume(P))

    def test_linear_image_of_a_tetrahedron(self):
        P = convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
        A = ((1, 2, 0), (0, 1, 3), (1, 0, 1))  # det 7
        image = linear_image(P, A, (1, Fr(1, 2), 0))
        self.assertEqual(volume(image), 7 * volume(P))

    def test_intersection_and_subset(self):
        shifted = convex_hull([(Fr(1, 2), 0), (Fr(3, 2), 0), (Fr(3, 2), 1), (Fr(1, 2), 1)])
        common = intersection([SQUARE, shifted])
        self.assertEqual(volume(common), Fr(1, 2))
        self.assertTrue(is_subset(common, SQUARE))
        self.assertFalse(is_subset(SQUARE, common))
        far = convex_hull([(5, 5), (6, 5), (5, 6)])
        self.assertTrue(intersection([SQUARE, far]).is_empty)


if __name__ == "__main__":
    unittest.main()
