import unittest
from fractions import Fraction as Fr

from okounkov.errors import InvariantError, OutOfRangeError, PreconditionError, SchemaError
from okounkov.services.semigroup_engine import (
    body_approx,
    check_additivity,
    check_dimension_partition,
    essential_body,
    ingest,
    limit_volume,
    v_split,
    volume_limit_estimate,
    w_counts,
    w_split,
)


def line_payload(k_max):
    """Two points on P^1: the section x^a y^(k-a) vanishes to order a at 0 and k - a at infinity."""
    return {
        "n": 1,
        "N": 2,
        "order": "deglex",
        "levels": {str(k): [[[a], [k - a]] for a in range(k + 1)] for k in range(1, k_max + 1)},
        "h0": {str(k): k + 1 for k in range(1, k_max + 1)},
    }


class TestIngest(unittest.TestCase):
    def test_shape_errors(self):
        bad = line_payload(2)
        bad["levels"]["1"][0] = [[0]]
        with self.assertRaises(SchemaError):
            ingest(bad)
        with self.assertRaises(SchemaError):
            ingest({"n": 1, "N": 1, "levels": {"0": []}})

    def test_missing_level(self):
        data = ingest(line_payload(2))
        with self.assertRaises(OutOfRangeError):
            v_split(data, 0, 5)
        with self.assertRaises(OutOfRangeError):
            v_split(data, 2, 1)


class TestSplits(unittest.TestCase):
    def setUp(self):
        self.data = ingest(line_payload(6))

    def test_v_split_is_strict(self):
        self.assertEqual([v.entries for v in v_split(self.data, 0, 4)], [(0,), (1,)])
        self.assertEqual([v.entries for v in v_split(self.data, 1, 4)], [(0,), (1,)])

    def test_w_split_breaks_ties_towards_earlier_point(self):
        self.assertEqual([v.entries for v in w_split(self.data, 0, 4)], [(0,), (1,), (2,)])
        self.assertEqual(w_counts(self.data, 4), [3, 2])

    def test_dimension_partition(self):
        for k in range(1, 7):
            self.assertTrue(check_dimension_partition(self.data, k))
        self.assertFalse(check_dimension_partition(self.data, 3, h0=5))

    def test_partition_needs_a_count(self):
        payload = line_payload(2)
        del payload["h0"]
        with self.assertRaises(PreconditionError):
            check_dimension_partition(ingest(payload), 1)

    def test_additivity(self):
        self.assertTrue(check_additivity(self.data, 0, 1, 2))
        self.assertTrue(check_additivity(self.data, 1, 2, 4))


class TestBodies(unittest.TestCase):
    def test_limit_hull(self):
        approx = body_approx(ingest(line_payload(6)), 0, 6)
        self.assertEqual(limit_volume(approx), Fr(2, 5))
        self.assertEqual(approx.levels[6].vertices, ((0,), (Fr(1, 3),)))
        self.assertTrue(essential_body(approx, 6).coordinate_facets)
        with self.assertRaises(OutOfRangeError):
            essential_body(approx, 9)

    def test_volume_sequence(self):
        data = ingest(line_payload(6))
        self.assertEqual(volume_limit_estimate(data, 0, [2, 4]), [(2, Fr(1, 2)), (4, Fr(1, 2))])

    def test_non_monotone_levels(self):
        payload = {"n": 1, "N": 1, "levels": {"1": [[[1]]], "2": [[[0]]]}}
        with self.assertRaises(InvariantError):
            body_approx(ingest(payload), 0, 2)

    def test_bad_k_max(self):
        with self.assertRaises(OutOfRangeError):
            body_approx(ingest(line_payload(2)), 0, 0)


if __name__ == "__main__":
    unittest.main()
