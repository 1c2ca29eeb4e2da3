import unittest
from fractions import Fraction as Fr

from okounkov.core.geometry import Polytope, convex_hull, dilate, minkowski_sum
from okounkov.errors import DimensionMismatchError, GeometryError, PreconditionError
from okounkov.services.check_registry import CHECK_REGISTRY, CheckResult, register_check, run_checks
from okounkov.services.picard import PicardClass, SurfaceSpec
from okounkov.services.seshadri import (
    BodyFamily,
    okounkov_domain_volume,
    packing_volume_check,
    seshadri_property_suite,
    simplex_certificate,
    upper_bound_check,
    xi_simplex_fit,
)
from okounkov.services.surface_bodies import p2_body_formula, surface_bodies
from okounkov.services.toric_bodies import toric_bodies
from okounkov.services.toric_corpus import named_input

SIMPLEX = convex_hull([(0, 0), (1, 0), (0, 1)])
SQUARE = convex_hull([(0, 0), (1, 0), (1, 1), (0, 1)])


class TestSimplexFit(unittest.TestCase):
    def test_toric_square(self):
        fam = BodyFamily.of(toric_bodies(named_input("square/4")))
        result = xi_simplex_fit(fam)
        self.assertEqual(result.xi, Fr(1, 2))
        self.assertTrue(simplex_certificate(fam, result))
        self.assertIn("sqrt(xi)", result.capacity_note)

    def test_scaled_simplex(self):
        fam = BodyFamily.of([p2_body_formula(9, Fr(1, 3)).body] * 9)
        self.assertEqual(xi_simplex_fit(fam).xi, Fr(1, 3))

    def test_surface_deglex_body(self):
        bodies = surface_bodies(SurfaceSpec.delpezzo(2), PicardClass.hyperplane(2))
        fam = BodyFamily.of([b.body_deglex_coords for b in bodies])
        self.assertEqual(xi_simplex_fit(fam).xi, Fr(1, 2))

    def test_empty_body_forces_zero(self):
        fam = BodyFamily.of([SIMPLEX, Polytope.empty(2)])
        result = xi_simplex_fit(fam)
        self.assertEqual(result.xi, 0)
        self.assertEqual(result.witness_body, 1)
        self.assertIsNone(result.witness_facet)
        self.assertTrue(simplex_certificate(fam, result))

    def test_body_away_from_origin(self):
        shifted = convex_hull([(1, 1), (2, 1), (1, 2)])
        self.assertEqual(xi_simplex_fit(BodyFamily.of([shifted])).xi, 0)

    def test_family_validation(self):
        with self.assertRaises(GeometryError):
            BodyFamily.of([])
        with self.assertRaises(DimensionMismatchError):
            BodyFamily.of([SIMPLEX, convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])])
        with self.assertRaises(GeometryError):
            BodyFamily.of([convex_hull([(-1, 0), (1, 0), (0, 1)])])


class TestVolumes(unittest.TestCase):
    def test_domain_volume(self):
        vol = okounkov_domain_volume(dilate(SIMPLEX, Fr(1, 3)))
        self.assertEqual(vol.lebesgue_coefficient, Fr(1, 18))
        self.assertEqual(vol.symplectic, Fr(1, 9))
        self.assertEqual(okounkov_domain_volume(SQUARE).symplectic, 2)
        self.assertEqual(okounkov_domain_volume(Polytope.empty(2)).symplectic, 0)

    def test_upper_bound(self):
        self.assertTrue(upper_bound_check(BodyFamily.of(toric_bodies(named_input("square/4"))), 2))
        self.assertTrue(upper_bound_check(BodyFamily.of([p2_body_formula(9, Fr(1, 3)).body] * 9), 1))
        self.assertFalse(upper_bound_check(BodyFamily.of([SQUARE]), Fr(1, 2)))

    def test_packing_volume(self):
        fam = BodyFamily.of(toric_bodies(named_input("square/4")))
        self.assertEqual(packing_volume_check(fam, 2), (2, 2, True))


class TestPropertySuite(unittest.TestCase):
    def test_homogeneity(self):
        inp = named_input("square/4")
        fam = BodyFamily.of(toric_bodies(inp))
        scaled = BodyFamily.of(toric_bodies(inp.dilated(3)))
        (result,) = seshadri_property_suite(fam, scaled, 3)
        self.assertTrue(result.passed)
        self.assertEqual(result.lhs, "3/2")

    def test_superadditivity(self):
        fam = BodyFamily.of([SIMPLEX])
        other = BodyFamily.of([SQUARE])
        total = BodyFamily.of([minkowski_sum(SIMPLEX, SQUARE)])
        results = seshadri_property_suite(fam, fam.dilated(2), 2, total, [fam, other])
        self.assertEqual([r.name for r in results], ["xi_homogeneity", "xi_superadditivity"])
        self.assertTrue(all(r.passed for r in results))


class TestCheckRegistry(unittest.TestCase):
    def setUp(self):
        @register_check("unit_sample")
        def sample():
            return [CheckResult.compare("unit_sample", Fr(1, 2), Fr(2, 4))]

        @register_check("unit_raises")
        def raises():
            raise PreconditionError("boom")

    def tearDown(self):
        CHECK_REGISTRY.pop("unit_sample", None)
        CHECK_REGISTRY.pop("unit_raises", None)

    def test_run_named(self):
        (result,) = run_checks(["unit_sample"])
        self.assertTrue(result.passed)
        self.assertEqual((result.lhs, result.rhs), ("1/2", "1/2"))

    def test_errors_become_failed_results(self):
        (result,) = run_checks(["unit_raises"])
        self.assertFalse(result.passed)
        self.assertEqual(result.detail, "PreconditionError")

    def test_unknown_check(self):
        with self.assertRaises(KeyError):
            run_checks(["no_such_check"])

    def test_relations(self):
        self.assertTrue(CheckResult.compare("x", 1, 2, "<=").passed)
        self.assertFalse(CheckResult.compare("x", 1, 2, ">=").passed)
        self.assertEqual(CheckResult.holds("x", True).lhs, "true")
        with self.assertRaises(ValueError):
            CheckResult.compare("x", 1, 2, "<")


if __name__ == "__main__":
    unittest.main()
