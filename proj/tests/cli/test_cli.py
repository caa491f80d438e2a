"""End-to-end checks of the rml binary: documented examples, schemas, errors, determinism.

Usage: test_cli.py <path-to-rml> <repo-root>
"""
import json
import pathlib
import subprocess
import sys
import tempfile
import unittest

import jsonschema

RML = None
ROOT = None


def run(*args, expect=0, stdin=None):
    p = subprocess.run([RML, *map(str, args)], capture_output=True, text=True, input=stdin, timeout=600)
    if p.returncode != expect:
        raise AssertionError(f"rml {' '.join(map(str, args))}: exit {p.returncode}\n{p.stderr}")
    return p


def schema(kind):
    return json.loads((ROOT / "schemas" / f"{kind}.schema.json").read_text())


def run_json(*args, stdin=None):
    doc = json.loads(run(*args, stdin=stdin).stdout)
    jsonschema.validate(doc, schema(doc["kind"]))
    return doc


class Cli(unittest.TestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = pathlib.Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()

    def path(self, name):
        return self.tmp / name

    def test_turan_pendant_count(self):
        run("construct", "turan", "--n", 16, "--k", 4, "-o", self.path("t.qcol"))
        doc = run_json("count", "--pattern", "clique-pendants:4:1,0,0,0", "--coloring", self.path("t.qcol"))
        self.assertEqual(doc["report"]["total"], "960")

    def test_per_vertex_sums_to_t_total(self):
        run("construct", "random", "--n", 9, "--q", 3, "--seed", 5, "-o", self.path("r.qcol"))
        doc = run_json("count", "--pattern", "starburst:3:1", "--coloring", self.path("r.qcol"), "--per-vertex")
        rep = doc["report"]
        self.assertEqual(sum(int(x) for x in rep["per_vertex"]), rep["t"] * int(rep["total"]))

    def test_count_csv(self):
        run("construct", "turan", "--n", 10, "--k", 4, "-o", self.path("t.qcol"))
        out = run("count", "--pattern", "clique:3", "--coloring", self.path("t.qcol"), "--csv").stdout.splitlines()
        self.assertEqual(out[0], "vertex,m_v")
        self.assertEqual(len(out), 11)

    def test_stdin_pipeline(self):
        text = run("construct", "pentagon").stdout
        doc = run_json("count", "--pattern", "clique:3", "--coloring", "-", stdin=text)
        self.assertEqual(doc["report"]["total"], "0")

    def test_diff_g6(self):
        doc = run_json("ramsey", "diff-g6", ROOT / "data/r55_42a.g6", ROOT / "data/r55_42b.g6")
        self.assertEqual(doc["summary"], "1 differing edge")
        self.assertEqual(doc["pairs"][0]["zero_indexed"], [31, 39])
        self.assertEqual(doc["pairs"][0]["one_indexed"], [32, 40])

    def test_clique_numbers_of_42_vertex_graphs(self):
        for name in ("r55_42a.g6", "r55_42b.g6"):
            doc = run_json("ramsey", "clique", ROOT / "data" / name)
            self.assertEqual((doc["clique_number"], doc["independence_number"]), (4, 4))

    def test_polite_k4(self):
        self.assertEqual(run_json("ledger", "polite", "--k", 4, "--table", "builtin")["verdict"], "not_polite")

    def test_lemma31_threshold_and_small_t(self):
        for k, h in ((4, 4), (4, 5), (5, 5)):
            for conv in ("closed-form", "squared"):
                self.assertTrue(run_json("ledger", "lemma31", "--k", k, "--h", h, "--lambda", conv)["all_hold"])
        items = run_json("ledger", "lemma31", "--k", 4, "--h", 5, "--t", 10)["items"]
        self.assertEqual(items[0]["verdict"], "fails")

    def test_ledger_three_color_and_bounds(self):
        doc = run_json("ledger", "three-color", "--k", 4)
        self.assertEqual([i["name"] for i in doc["items"]], ["eta_lower", "eta_small", "ratio_gap", "r_gap"])
        self.assertEqual(doc["items"][3]["verdict"], "holds")
        doc = run_json("ledger", "bound", "erdos_szekeres", 4, 4)
        self.assertEqual(doc["exact"]["exact"], "20")

    def test_exhaustive_k3(self):
        doc = run_json("minimize", "exhaustive", "--pattern", "clique:3", "--n", 6, "--modulo-symmetry")
        self.assertEqual(doc["min_count"], "12")
        doc = run_json("minimize", "bonbon", "--pattern", "clique:3", "--n", 6)
        self.assertEqual(doc["turan_count"], "12")

    def test_local_search_returns_to_turan(self):
        run("construct", "turan", "--n", 18, "--k", 4, "-o", self.path("t.qcol"))
        lines = self.path("t.qcol").read_text().split("\n")
        colors = lines[2].split()
        colors[0] = "1"  # pair (0,1) lies inside the first part
        self.path("f.qcol").write_text("\n".join(lines[:2] + [" ".join(colors)]))
        doc = run_json("minimize", "local", "--pattern", "clique-pendants:4:1,0,0,0", "--coloring", self.path("f.qcol"),
                       "--trace", self.path("trace.jsonl"), "--out", self.path("final.qcol"))
        self.assertEqual(doc["moves"], 1)
        self.assertEqual(doc["final_total"], "2160")
        self.assertEqual(self.path("final.qcol").read_text(), self.path("t.qcol").read_text().rstrip("\n"))
        line_schema = schema("trace_line")
        for line in self.path("trace.jsonl").read_text().splitlines():
            jsonschema.validate(json.loads(line), line_schema)

    def test_r34_suite(self):
        for a in ("red", "blue"):
            for b in ("red", "blue"):
                run("construct", "r34-k8", "--chord26", a, "--chord37", b, "-o", self.path(f"k8{a}{b}.qcol"))
                self.assertTrue(run_json("ramsey", "verify", "--coloring", self.path(f"k8{a}{b}.qcol"),
                                         "--forbidden", "3,4")["verdict"]["valid"])
        self.assertTrue(run_json("ramsey", "iso", self.path("k8redblue.qcol"), self.path("k8bluered.qcol"))["isomorphic"])
        self.assertFalse(run_json("ramsey", "iso", self.path("k8blueblue.qcol"), self.path("k8redred.qcol"))["isomorphic"])
        run("construct", "mixed", "--chi1", self.path("k8blueblue.qcol"), "--chi2", self.path("k8bluered.qcol"),
            "--u", 7, "-o", self.path("m.qcol"))
        self.assertTrue(run_json("ramsey", "verify", "--coloring", self.path("m.qcol"),
                                 "--forbidden", "3,4,inf")["verdict"]["valid"])
        self.assertFalse(run_json("ramsey", "is-blowup", "--coloring", self.path("m.qcol"),
                                  "--sizes", "2,2,2,2,2,2,2,2")["is_blowup"])

    def test_pentagon_blowup(self):
        run("construct", "pentagon", "-o", self.path("p.qcol"))
        run("construct", "blowup", "--base", self.path("p.qcol"), "--n", 25, "-o", self.path("b.qcol"))
        doc = run_json("count", "--pattern", "clique:3", "--coloring", self.path("b.qcol"))
        self.assertEqual(doc["report"]["total"], "300")
        self.assertTrue(run_json("ramsey", "blowup-like", "--coloring", self.path("b.qcol"), "--k", 3, "--p", 5)["holds"])
        self.assertTrue(run_json("ramsey", "is-blowup", "--coloring", self.path("b.qcol"), "--sizes", "5,5,5,5,5")["is_blowup"])
        self.assertEqual(run_json("ramsey", "extend", "--coloring", self.path("p.qcol"), "--forbidden", "3,3")["count"], 0)
        run("construct", "lexprod", "--outer", self.path("p.qcol"), "--inner", self.path("p.qcol"), "-o", self.path("l.qcol"))
        self.assertTrue(run_json("ramsey", "verify", "--coloring", self.path("l.qcol"),
                                 "--forbidden", "3,3,3,3")["verdict"]["valid"])

    def test_goodman(self):
        run("construct", "random", "--n", 13, "--seed", 11, "-o", self.path("r.qcol"))
        self.assertTrue(run_json("goodman", "--coloring", self.path("r.qcol"))["agree"])

    def test_same_seed_is_byte_identical(self):
        outs = [run("construct", "random", "--n", 12, "--q", 3, "--seed", 42).stdout for _ in range(2)]
        self.assertEqual(outs[0], outs[1])
        self.assertNotEqual(outs[0], run("construct", "random", "--n", 12, "--q", 3, "--seed", 43).stdout)
        a = run("--threads", 1, "minimize", "exhaustive", "--pattern", "clique:3", "--n", 5).stdout
        b = run("--threads", 4, "minimize", "exhaustive", "--pattern", "clique:3", "--n", 5).stdout
        self.assertEqual(a, b)

    def test_experiment_run(self):
        conf = self.path("e.conf")
        conf.write_text("# test pipeline\nname = demo\nseed = 9\nconstruct = random\nconstruct.n = 9\n"
                        "pattern = clique-pendants:3:1,0,0\nminimize = local\n"
                        "minimize.moves = edge_recolor,vertex_clone\n")
        first = run("experiment", "run", conf).stdout
        manifest1 = (self.tmp / "demo.out" / "manifest.json").read_text()
        second = run("experiment", "run", conf).stdout
        self.assertEqual(first, second)
        summary = json.loads(first)
        jsonschema.validate(summary, schema("experiment_run"))
        manifest = json.loads(manifest1)
        jsonschema.validate(manifest, schema("experiment_manifest"))
        self.assertEqual(manifest["files"], summary["files"])
        for name in ("count", "minimize_local"):
            path = self.tmp / "demo.out" / ("count.json" if name == "count" else "minimize.json")
            jsonschema.validate(json.loads(path.read_text()), schema(name))

    def test_experiment_rejects_unknown_key(self):
        conf = self.path("bad.conf")
        conf.write_text("name = x\nconstruct = pentagon\npattern = clique:3\nminimise = local\n")
        err = json.loads(run("experiment", "run", conf, expect=3).stderr)
        self.assertEqual(err["position"], 4)

    def test_errors_are_one_line_json(self):
        cases = [
            (("count", "--pattern", "clique:3"), 2),
            (("count", "--pattern", "bogus:3", "--coloring", ROOT / "data/r55_42a.g6"), 3),
            (("construct", "turan", "--n", 5, "--k", 1), 4),
            (("minimize", "exhaustive", "--pattern", "clique:3", "--n", 9, "--budget", 10), 5),
            (("ramsey", "iso", ROOT / "nope.qcol", ROOT / "nope.qcol"), 7),
            (("ledger", "bound", "nope"), 4),
        ]
        err_schema = schema("error")
        for args, code in cases:
            p = run(*args, expect=code)
            self.assertEqual(p.stdout, "")
            lines = p.stderr.splitlines()
            self.assertEqual(len(lines), 1, p.stderr)
            doc = json.loads(lines[0])
            jsonschema.validate(doc, err_schema)
            self.assertEqual(doc["exit_code"], code)


if __name__ == "__main__":
    RML = sys.argv[1]
    ROOT = pathlib.Path(sys.argv[2]).resolve()
    unittest.main(argv=sys.argv[:1], verbosity=2)
