"""Exit codes, formats and determinism of the command-line tool."""
import json
import os
import subprocess
import sys
import tempfile
import unittest

EXE = os.environ.get("COXSHUFFLE_CLI", "coxshuffle")


def run(*args):
    p = subprocess.run([EXE, *args], capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


class Verify(unittest.TestCase):
    def test_side_suites(self):
        code, out, _ = run("verify", "--family", "sideA", "--n", "4", "--checks", "semigroup,idempotents,minpoly")
        self.assertEqual(code, 0)
        rep = json.loads(out)
        self.assertTrue(rep["passed"])
        self.assertTrue(all(c["passed"] for c in rep["checks"]))
        self.assertTrue(all(c["statement"] for c in rep["checks"]))

    def test_riffle_double(self):
        code, out, _ = run("verify", "--family", "riffleB", "--n", "3", "--checks", "double")
        self.assertEqual(code, 0)
        names = [c["name"] for c in json.loads(out)["checks"]]
        self.assertIn("double-system", names)

    def test_failed_identity_exits_1(self):
        # B -> D collapses the double by one dimension
        code, out, _ = run("verify", "--family", "riffleD", "--n", "3", "--checks", "double")
        self.assertEqual(code, 1)
        self.assertFalse(json.loads(out)["passed"])

    def test_scale_limit(self):
        code, _, err = run("verify", "--family", "sideA", "--n", "99")
        self.assertEqual(code, 2)
        self.assertIn("scale limit", err)
        self.assertEqual(run("verify", "--family", "sideB", "--n", "6")[0], 2)

    def test_bad_flags(self):
        self.assertEqual(run("verify", "--family", "nope")[0], 2)
        self.assertEqual(run("verify", "--n", "x")[0], 2)
        self.assertEqual(run("verify", "--family", "sideA", "--checks", "double")[0], 2)
        self.assertEqual(run("spectrum", "--family", "riffleA", "--a", "0")[0], 2)
        self.assertEqual(run("simulate", "--trials", "0")[0], 2)
        self.assertEqual(run("qshuffle", "--building", "glnA", "--q", "4")[0], 2)
        self.assertEqual(run()[0], 2)


class Outputs(unittest.TestCase):
    def test_spectrum(self):
        code, out, _ = run("spectrum", "--family", "riffleA", "--n", "4", "--a", "2", "--format", "json")
        self.assertEqual(code, 0)
        rep = json.loads(out)
        self.assertEqual(rep["eigenvalues"], [2, 4, 8, 16])
        self.assertEqual(sum(rep["multiplicities"]), 24)

    def test_spectrum_csv(self):
        code, out, _ = run("spectrum", "--family", "sideB", "--n", "2", "--a", "1", "--format", "csv")
        self.assertEqual(code, 0)
        rows = out.strip().split("\n")
        self.assertEqual(len(rows), 8)
        self.assertTrue(all(len(r.split(",")) == 8 for r in rows))

    def test_qshuffle(self):
        code, out, _ = run("qshuffle", "--building", "glnA", "--n", "3", "--q", "2")
        self.assertEqual(code, 0)
        self.assertTrue(json.loads(out)["passed"])

    def test_simulate_csv(self):
        code, out, _ = run("simulate", "--family", "sideB", "--n", "3", "--a", "1", "--steps", "30",
                           "--trials", "20000", "--seed", "7")
        self.assertEqual(code, 0)
        lines = out.strip().split("\n")
        self.assertEqual(lines[0], "step,chamber,tv_distance")
        self.assertEqual(len(lines), 32)
        self.assertEqual(lines[1].split(",")[2], "0.979167")  # 1 - 1/48
        self.assertLess(float(lines[-1].split(",")[2]), 0.05)

    def test_simulate_config(self):
        with tempfile.TemporaryDirectory() as d:
            cfg = os.path.join(d, "walk.json")
            with open(cfg, "w") as f:
                json.dump({"family": "riffleA", "n": 3, "a": 2, "steps": 5, "trials": 500, "seed": 3}, f)
            a = run("simulate", "--config", cfg)
            b = run("simulate", "--family", "riffleA", "--n", "3", "--a", "2", "--steps", "5", "--trials", "500",
                    "--seed", "3")
            self.assertEqual(a, b)
            c = run("simulate", "--config", cfg, "--seed", "4")
            self.assertNotEqual(a[1], c[1])

    def test_numbers(self):
        code, out, _ = run("numbers", "--kind", "plain", "--max-a", "4", "--max-j", "4")
        self.assertEqual(code, 0)
        self.assertIn("4,2,7\n", out)
        code, out, _ = run("numbers", "--kind", "qA", "--q", "2", "--max-a", "2", "--max-j", "2")
        self.assertIn("2,1,1\n", out)
        self.assertIn("2,2,2\n", out)  # S_q(2,2) = q

    def test_enumerate(self):
        code, out, _ = run("enumerate", "--family", "A", "--n", "3")
        self.assertEqual(code, 0)
        self.assertEqual(len(out.split()), 13)
        code, out, _ = run("enumerate", "--family", "riffleD", "--n", "3", "--format", "json")
        self.assertEqual(json.loads(out)["count"], 75)

    def test_map_round_trip(self):
        code, out, _ = run("map", "--map", "D-A", "--n", "3", "--face", "({2,-1}|C:{3,-3})")
        self.assertEqual((code, out), (0, "({2}|{3}|{1})\n"))
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "x.json")
            code, out, _ = run("map", "--map", "B-D", "--n", "3", "--element", "1/2*({2}|{-3}|Z:{1}) + 2*({1,2,-3})",
                               "--format", "json", "--out", path)
            self.assertEqual((code, out), (0, ""))
            with open(path) as f:
                x = json.load(f)
            self.assertEqual(x["family"], "D")
            code, out, _ = run("map", "--map", "D-A", "--n", "3", "--input", path)
            self.assertEqual((code, out), (0, "2*({1,2}|{3}) + 1/2*({2}|{1}|{3})\n"))

    def test_unwritable_output(self):
        self.assertNotEqual(run("numbers", "--out", "/nonexistent/dir/x.csv")[0], 0)


class Determinism(unittest.TestCase):
    def test_byte_identical(self):
        for args in (["simulate", "--family", "riffleB", "--n", "3", "--a", "3", "--steps", "8", "--trials", "3000",
                      "--seed", "11", "--format", "json"],
                     ["verify", "--family", "twoSidedA", "--n", "4"],
                     ["spectrum", "--family", "sideD", "--n", "3", "--a", "2", "--format", "csv"],
                     ["qshuffle", "--building", "orthogonalB", "--n", "2", "--q", "3"]):
            self.assertEqual(run(*args), run(*args))


if __name__ == "__main__":
    if len(sys.argv) > 1 and os.path.exists(sys.argv[1]):
        EXE = sys.argv.pop(1)
    unittest.main()
