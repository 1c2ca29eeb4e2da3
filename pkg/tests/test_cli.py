import contextlib
import io
import json
import tempfile
import unittest
from pathlib import Path

from okounkov.main import main


class CliTestCase(unittest.TestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()

    def write_input(self, name, payload):
        path = self.tmp / name
        path.write_text(payload if isinstance(payload, str) else json.dumps(payload), encoding="utf-8")
        return path

    def run_cli(self, *argv):
        out = io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
            code = main([str(a) for a in argv])
        return code, out.getvalue()


class TestExitCodes(CliTestCase):
    def test_usage_error(self):
        code, _ = self.run_cli()
        self.assertEqual(code, 2)

    def test_malformed_json(self):
        path = self.write_input("broken.json", "{not json")
        code, _ = self.run_cli("toric", "--input", path, "--out", self.tmp / "out")
        self.assertEqual(code, 2)

    def test_missing_file(self):
        code, _ = self.run_cli("toric", "--input", self.tmp / "absent.json", "--out", self.tmp / "out")
        self.assertEqual(code, 2)

    def test_float_coordinates_are_rejected(self):
        path = self.write_input("surface.json", {"N": 9, "epsilon": 0.3})
        code, _ = self.run_cli("surface", "--input", path, "--out", self.tmp / "out")
        self.assertEqual(code, 2)

    def test_non_delzant_polytope(self):
        path = self.write_input("bad.json", {"vertices": [[0, 0], [2, 0], [0, 1]]})
        code, _ = self.run_cli("toric", "--input", path, "--out", self.tmp / "out")
        self.assertEqual(code, 3)

    def test_unknown_check(self):
        code, _ = self.run_cli("check", "no_such_check", "--out", self.tmp / "out")
        self.assertEqual(code, 2)


class TestToricMode(CliTestCase):
    def test_simplex_report(self):
        path = self.write_input("simplex.json", {"vertices": [[0, 0], [1, 0], [0, 1]], "k_max": 3})
        code, stdout = self.run_cli("toric", "--input", path, "--out", self.tmp / "a")
        self.assertEqual(code, 0)
        report = json.loads(stdout)
        self.assertEqual(report["xi"], "1/2")
        self.assertTrue(report["certificate_ok"])
        self.assertEqual(report["toric"]["meeting_point"], ["1/3", "1/3"])
        self.assertTrue(all(c["passed"] for c in report["checks"]))
        for name in ("report.json", "timings.json", "oracle.json"):
            self.assertTrue((self.tmp / "a" / name).exists(), name)

    def test_reports_are_byte_identical(self):
        path = self.write_input("square.json", {"vertices": [[0, 0], [1, 0], [1, 1], [0, 1]], "k_max": 2})
        self.assertEqual(self.run_cli("toric", "--input", path, "--out", self.tmp / "a", "--svg")[0], 0)
        self.assertEqual(self.run_cli("toric", "--input", path, "--out", self.tmp / "b", "--svg")[0], 0)
        for name in ("report.json", "oracle.json", "body_0.svg", "subdivision.svg"):
            self.assertEqual((self.tmp / "a" / name).read_bytes(), (self.tmp / "b" / name).read_bytes(), name)

    def test_point_selection(self):
        path = self.write_input("square.json", {"vertices": [[0, 0], [1, 0], [1, 1], [0, 1]], "k_max": 2})
        code, stdout = self.run_cli("toric", "--input", path, "--points", "0,1", "--out", self.tmp / "out")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(stdout)["xi"], "1/2")


class TestSurfaceMode(CliTestCase):
    def test_two_points(self):
        path = self.write_input("n2.json", {"N": 2, "t_values": ["1/4", "1/2", "3/4"]})
        code, stdout = self.run_cli("surface", "--input", path, "--out", self.tmp / "out")
        self.assertEqual(code, 0)
        report = json.loads(stdout)
        self.assertEqual(report["surface"]["chamber_count"], 2)
        self.assertIn("zariski_chambers", [c["name"] for c in report["checks"]])
        self.assertEqual(report["surface"]["breakpoints"], ["1/2"])
        self.assertEqual(report["xi"], "1/2")
        self.assertEqual(len(report["bodies"]), 2)
        self.assertTrue(all(c["passed"] for c in report["checks"]))

    def test_irrational_threshold_truncates_the_bodies(self):
        curves = [[0] + [-1 if k == i else 0 for k in range(10)] for i in range(10)]
        path = self.write_input("n10.json", {"N": 10, "curves": curves, "t_values": ["1/4"]})
        code, stdout = self.run_cli("surface", "--input", path, "--out", self.tmp / "out")
        self.assertEqual(code, 0)
        report = json.loads(stdout)
        surface = report["surface"]
        self.assertEqual(surface["mu"]["value"], "sqrt(10)/10")
        self.assertIsNone(surface["mu"]["rational"])
        self.assertEqual(surface["truncated_at"], "1/4")
        self.assertEqual(surface["chamber_count"], 1)
        self.assertEqual(surface["slices"], [{"t": "1/4", "lengths": ["1/4"] * 10}])
        self.assertEqual(report["xi"], "1/4")
        names = [c["name"] for c in report["checks"]]
        self.assertIn("surface_volume[t<=1/4]", names)
        self.assertNotIn("zariski_chambers", names)
        self.assertTrue(all(c["passed"] for c in report["checks"]))

    def test_closed_form(self):
        path = self.write_input("n9.json", {"N": 9, "epsilon": "1/3"})
        code, stdout = self.run_cli("surface", "--input", path, "--out", self.tmp / "out")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(stdout)["xi"], "1/3")


class TestOtherModes(CliTestCase):
    def test_seshadri_from_surface_input(self):
        path = self.write_input("n9.json", {"N": 9, "epsilon": "1/3"})
        code, stdout = self.run_cli("seshadri", "--from", path, "--out", self.tmp / "out")
        self.assertEqual(code, 0)
        report = json.loads(stdout)
        self.assertEqual(report["xi"], "1/3")
        self.assertTrue(report["upper_bound_ok"])

    def test_semigroup(self):
        payload = {
            "n": 1,
            "N": 2,
            "levels": {str(k): [[[a], [k - a]] for a in range(k + 1)] for k in range(1, 7)},
            "h0": {str(k): k + 1 for k in range(1, 7)},
        }
        path = self.write_input("line.json", payload)
        code, stdout = self.run_cli("semigroup", "--input", path, "--out", self.tmp / "out")
        self.assertEqual(code, 0)
        report = json.loads(stdout)
        self.assertEqual(report["volumes"]["body_0"], "2/5")
        self.assertTrue(all(c["passed"] for c in report["checks"]))

    def test_check_list(self):
        code, stdout = self.run_cli("check", "--list")
        self.assertEqual(code, 0)
        self.assertIn("barycentric", stdout.split())

    def test_single_check(self):
        code, stdout = self.run_cli("check", "barycentric", "--out", self.tmp / "out")
        self.assertEqual(code, 0)
        self.assertTrue(json.loads(stdout)["checks"])


if __name__ == "__main__":
    unittest.main()
