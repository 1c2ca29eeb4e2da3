import random
import unittest
from fractions import Fraction as Fr

from hypothesis import given, settings, strategies as st

from okounkov.checks.surface_checks import random_effective_class
from okounkov.errors import (
    DimensionMismatchError,
    IrrationalThresholdError,
    NotBigError,
    NotPseudoeffectiveError,
    OutOfRangeError,
    PreconditionError,
)
from okounkov.services.picard import (
    CurveProvenance,
    PicardClass,
    SurfaceSpec,
    delpezzo_curves,
    intersect,
    self_intersection,
)
from okounkov.services.zariski import (
    check_zariski,
    ray_breakpoints,
    volume_of,
    zariski,
    zariski_chamber_count,
)

H2 = PicardClass.hyperplane(2)
E1, E2 = PicardClass.exceptional(0, 2), PicardClass.exceptional(1, 2)


class TestIntersectionForm(unittest.TestCase):
    def test_basic_products(self):
        self.assertEqual(self_intersection(H2), 1)
        self.assertEqual(self_intersection(E1), -1)
        self.assertEqual(intersect(H2, E1), 0)
        self.assertEqual(intersect(E1, E2), 0)

    def test_sign_convention(self):
        H1, E = PicardClass.hyperplane(1), PicardClass.exceptional(0, 1)
        # coordinate list [d, m_1] stands for dH - m_1 E_1
        self.assertEqual(PicardClass.from_list([1, 1]), H1 - E)
        self.assertEqual(intersect(PicardClass.from_list([1, 1]), E), 1)
        self.assertEqual(intersect(H1 + E, E), -1)

    def test_canonical_class(self):
        K = PicardClass.canonical(3)
        self.assertEqual(self_intersection(K), 6)
        self.assertEqual(intersect(K, PicardClass.exceptional(2, 3)), -1)

    def test_shape_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            intersect(H2, PicardClass.hyperplane(3))


class TestDelPezzoCurves(unittest.TestCase):
    def test_counts(self):
        for N, count in {1: 1, 2: 3, 3: 6, 4: 10, 5: 16, 6: 27, 7: 56, 8: 240}.items():
            self.assertEqual(len(delpezzo_curves(N)), count, N)

    def test_line_through_two_points(self):
        self.assertIn(PicardClass.make(1, [1, 1]), delpezzo_curves(2))

    def test_range(self):
        with self.assertRaises(OutOfRangeError):
            delpezzo_curves(9)

    def test_user_curves_must_be_negative(self):
        with self.assertRaises(PreconditionError):
            SurfaceSpec.user(2, [H2])
        spec = SurfaceSpec.user(2, [E1])
        self.assertEqual(spec.provenance, CurveProvenance.USER_SUPPLIED)


class TestZariski(unittest.TestCase):
    def setUp(self):
        self.spec = SurfaceSpec.delpezzo(2)

    def test_nef_class_is_its_own_positive_part(self):
        dec = zariski(self.spec, H2)
        self.assertEqual(dec.P, H2)
        self.assertTrue(dec.Nneg.is_zero())
        self.assertEqual(dec.volume, 1)

    def test_line_enters_the_support(self):
        D = H2 - (E1 + E2) * Fr(3, 4)
        dec = zariski(self.spec, D)
        line = PicardClass.make(1, [1, 1])
        self.assertEqual(dec.Nneg, line * Fr(1, 2))
        self.assertEqual(dec.P, PicardClass.make(2, [1, 1]) * Fr(1, 4))
        check_zariski(self.spec, dec)

    def test_exceptional_curve_is_split_off(self):
        spec = SurfaceSpec.delpezzo(1)
        D = PicardClass.hyperplane(1) + PicardClass.exceptional(0, 1)
        dec = zariski(spec, D)
        self.assertEqual(dec.P, PicardClass.hyperplane(1))
        self.assertEqual(dec.Nneg, PicardClass.exceptional(0, 1))

    def test_idempotent(self):
        D = PicardClass.make(3, [2, 1])
        dec = zariski(self.spec, D)
        again = zariski(self.spec, dec.P)
        self.assertEqual(again.P, dec.P)
        self.assertTrue(again.Nneg.is_zero())

    def test_not_pseudoeffective(self):
        with self.assertRaises(NotPseudoeffectiveError):
            zariski(self.spec, H2 * -1)

    def test_volume_of(self):
        self.assertEqual(volume_of(self.spec, PicardClass.make(2, [1, 1])), 2)

    def test_seed_with_a_non_negative_definite_support(self):
        # H + 3E1 + 3E2 seeded with the line and both exceptional curves
        D = PicardClass.make(1, [-3, -3])
        dec = zariski(self.spec, D, seed_support=range(len(self.spec.curves)))
        self.assertEqual(dec.P, H2)
        self.assertEqual(dec.Nneg, (E1 + E2) * 3)
        check_zariski(self.spec, dec)


SPECS = {N: SurfaceSpec.delpezzo(N) for N in range(2, 6)}


class TestSeededZariski(unittest.TestCase):
    @settings(max_examples=80, deadline=None)
    @given(st.integers(2, 5), st.integers(0, 2**32 - 1), st.sets(st.integers(0, 15), max_size=6))
    def test_any_seed_gives_the_default_decomposition(self, N, sample_seed, picks):
        spec = SPECS[N]
        D = random_effective_class(spec, random.Random(sample_seed))
        default = zariski(spec, D)
        seeded = zariski(spec, D, sorted(i for i in picks if i < len(spec.curves)))
        self.assertEqual(seeded.P, default.P)
        self.assertEqual(seeded.Nneg, default.Nneg)
        check_zariski(spec, seeded)


class TestRays(unittest.TestCase):
    def test_two_points(self):
        ray = ray_breakpoints(SurfaceSpec.delpezzo(2), H2)
        self.assertEqual(ray.breakpoints, (Fr(1, 2),))
        self.assertEqual(ray.mu.rational, 1)
        self.assertEqual(len(ray.segments), 2)
        self.assertEqual(ray.positive_part(Fr(3, 4)), PicardClass.make(2, [1, 1]) * Fr(1, 4))
        self.assertEqual(zariski_chamber_count(SurfaceSpec.delpezzo(2), H2), 2)

    def test_one_point(self):
        spec = SurfaceSpec.delpezzo(1)
        ray = ray_breakpoints(spec, PicardClass.hyperplane(1))
        self.assertEqual(ray.breakpoints, ())
        self.assertEqual(ray.mu.rational, 1)
        self.assertEqual(zariski_chamber_count(spec, PicardClass.hyperplane(1)), 1)

    def test_nine_points_with_exceptional_curves_only(self):
        spec = SurfaceSpec.user(9, [PicardClass.exceptional(i, 9) for i in range(9)])
        ray = ray_breakpoints(spec, PicardClass.hyperplane(9))
        self.assertEqual(ray.mu.rational, Fr(1, 3))

    def test_irrational_threshold(self):
        spec = SurfaceSpec.user(2, [E1, E2])
        ray = ray_breakpoints(spec, H2)
        self.assertFalse(ray.mu.is_rational)
        self.assertTrue(ray.mu.exceeds(Fr(7, 10)))
        self.assertFalse(ray.mu.exceeds(Fr(3, 4)))
        with self.assertRaises(IrrationalThresholdError):
            ray.mu.rational
        self.assertEqual(ray.mu.lower_bound(100), Fr(7, 10))

    def test_negative_part_grows_along_the_ray(self):
        for N in (2, 3, 4, 5):
            spec = SPECS[N]
            L = PicardClass.hyperplane(N)
            ray = ray_breakpoints(spec, L)
            previous = {}
            for k in range(41):
                t = Fr(k, 40)
                if not ray.mu.exceeds(t):
                    break
                dec = zariski(spec, L - ray.G * t)
                current = dict(zip(dec.support, dec.coefficients))
                for idx, c in previous.items():
                    self.assertGreaterEqual(current.get(idx, 0), c, (N, t, idx))
                previous = current

    def test_not_big(self):
        with self.assertRaises(NotBigError):
            ray_breakpoints(SurfaceSpec.delpezzo(2), PicardClass.make(1, [1, 0]))


if __name__ == "__main__":
    unittest.main()
