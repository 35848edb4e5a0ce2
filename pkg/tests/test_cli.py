import csv
import io
import json
import subprocess
import sys

import pytest

from holescope import _backend
from holescope import graph as gr
from holescope.cli import main
from holescope.jaco import build_jaco


def run(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def k6(tmp_path):
    p = tmp_path / "k6.txt"
    gr.write_edge_list(gr.complete(6), p)
    return str(p)


class TestGen:
    def test_complete(self, capsys):
        code, out, _ = run(["gen", "complete", "5"], capsys)
        assert code == 0
        assert out.splitlines()[0] == "5 10"
        assert len(out.splitlines()) == 11

    def test_gnp_deterministic(self, capsys):
        a = run(["gen", "gnp", "30", "0.2", "--seed", "3"], capsys)[1]
        b = run(["gen", "gnp", "30", "0.2", "--seed", "3"], capsys)[1]
        assert a == b == gr.gnp(30, 0.2, 3).to_text()

    @pytest.mark.parametrize("argv", [["gen", "cycle", "2"], ["gen", "gnp", "5"], ["gen", "path", "x"]])
    def test_bad_parameters(self, argv, capsys):
        assert run(argv, capsys)[0] == 2

    def test_output_file(self, tmp_path, capsys):
        p = tmp_path / "g.txt"
        assert run(["gen", "star", "3", "-o", str(p)], capsys)[0] == 0
        assert gr.read_edge_list(p) == gr.star(3)


class TestAnalyze:
    def test_default_is_holes(self, k6, capsys):
        code, out, _ = run(["analyze", k6], capsys)
        assert code == 0
        assert out == "n 6\nm 15\nh 20\n"

    def test_oracle_agrees(self, k6, capsys):
        assert run(["analyze", k6, "--oracle"], capsys)[1] == "n 6\nm 15\nh 20\n"

    def test_path_girth(self, tmp_path, capsys):
        p = tmp_path / "p9.txt"
        gr.write_edge_list(gr.path(9), p)
        assert "girth 0\n" in run(["analyze", str(p), "--girth"], capsys)[1]
        out = run(["analyze", str(p), "--girth", "--girth-convention", "infinity"], capsys)[1]
        assert "girth infinity\n" in out

    def test_jaco_pdeg(self, tmp_path, capsys):
        p = tmp_path / "j5.txt"
        p.write_text("5 5\n1 2\n2 3\n3 4\n3 5\n4 5\n")
        code, out, _ = run(["analyze", str(p), "--pdeg", "--list-triangles"], capsys)
        assert code == 0
        assert "pdeg 0 0 1 1 1\n" in out
        assert out.endswith("triangles 1\n3 4 5\n")

    def test_json(self, k6, capsys):
        doc = json.loads(run(["analyze", k6, "--holes", "--pdeg", "--girth", "--json"], capsys)[1])
        assert doc == {"n": 6, "m": 15, "h": 20, "pdeg": [10] * 6, "girth": 3}

    def test_malformed_reports_line(self, tmp_path, capsys):
        p = tmp_path / "bad.txt"
        p.write_text("4 2\n1 2\n3 x\n")
        code, _, err = run(["analyze", str(p)], capsys)
        assert code == 1
        assert "line 3" in err

    def test_missing_file(self, tmp_path, capsys):
        assert run(["analyze", str(tmp_path / "none.txt")], capsys)[0] == 1

    def test_unknown_flag(self, k6, capsys):
        assert run(["analyze", k6, "--frobnicate"], capsys)[0] == 2

    def test_oracle_guard(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("HOLESCOPE_MAX_N", "4")
        p = tmp_path / "k5.txt"
        gr.write_edge_list(gr.complete(5), p)
        assert run(["analyze", str(p), "--oracle"], capsys)[0] == 1


class TestDerived:
    def test_line_text(self, tmp_path, capsys):
        p = tmp_path / "s3.txt"
        gr.write_edge_list(gr.star(3), p)
        out = run(["line", str(p)], capsys)[1]
        assert "# labels\n1 e:1-2\n2 e:1-3\n3 e:1-4\n" in out

    def test_total_json(self, tmp_path, capsys):
        p = tmp_path / "k2.txt"
        gr.write_edge_list(gr.complete(2), p)
        doc = json.loads(run(["total", str(p), "--json"], capsys)[1])
        assert doc["n"] == 3 and doc["m"] == 3
        assert doc["labels"] == ["v:1", "v:2", "e:1-2"]


class TestJaco:
    def test_order_5(self, capsys):
        code, out, _ = run(["jaco", "5"], capsys)
        assert code == 0
        arcs, meta = out.split("# metadata\n")
        assert arcs == "5 5\n1 2\n2 3\n3 4\n3 5\n4 5\n"
        meta = json.loads(meta)
        assert meta["prime_jaconian"] == 3 and meta["hope_vertices"] == [4, 5] and meta["h_direct"] == 1

    def test_arc_file_parses_as_edge_list(self, tmp_path, capsys):
        arcs, meta = tmp_path / "a.txt", tmp_path / "m.json"
        run(["jaco", "12", "-o", str(arcs), "--meta", str(meta)], capsys)
        G = gr.read_edge_list(arcs)
        assert G.n == 12
        assert G.edge_list() == build_jaco(12).digraph.arcs()
        assert json.loads(meta.read_text())["n"] == 12

    def test_bad_order(self, capsys):
        assert run(["jaco", "0"], capsys)[0] == 2


class TestVerify:
    def test_default_corpus_exit_0(self, capsys):
        code, out, _ = run(["verify", "--default-corpus", "--threads", "2"], capsys)
        assert code == 0
        assert out.rstrip().endswith("0 failures")

    def test_golden_mutation_exit_3(self, tmp_path, capsys):
        assert run(["verify", "--spec", "complete:5", "--write-corpus", str(tmp_path)], capsys)[0] == 0
        (f,) = tmp_path.glob("*.txt")
        lines = f.read_text().splitlines()
        header = next(i for i, l in enumerate(lines) if not l.startswith("#"))
        n, m = lines[header].split()
        lines[header] = f"{n} {int(m) - 1}"
        lines.pop(header + 1)
        f.write_text("\n".join(lines) + "\n")
        code, out, _ = run(["verify", "--corpus", str(tmp_path), "--only", "HOLE-KN"], capsys)
        assert code == 3
        assert "FAIL HOLE-KN" in out and "witness" in out

    def test_json_lines(self, capsys):
        code, out, _ = run(["verify", "--spec", "cycle:3-4", "--only", "TOTAL-PATH-CYCLE", "--json"], capsys)
        rows = [json.loads(l) for l in out.splitlines()]
        assert code == 0
        assert [r["input"]["n"] for r in rows[:-1]] == [3, 4]
        assert rows[-1]["failed"] == 0
        assert rows[0]["erratum"] is True

    def test_usage_errors(self, capsys):
        assert run(["verify"], capsys)[0] == 2
        assert run(["verify", "--spec", "complete:3", "--only", "BOGUS"], capsys)[0] == 2
        assert run(["verify", "--spec", "complete:3", "--threads", "0"], capsys)[0] == 2

    def test_bad_spec_is_data_error(self, capsys):
        assert run(["verify", "--spec", "tree:3"], capsys)[0] == 1


class TestBench:
    def test_csv(self, capsys):
        code, out, _ = run(["bench", "--n", "60", "--p", "0.2", "--algo", "both", "--backend", "all"], capsys)
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert list(rows[0])[-2:] == ["seconds", "triangles_per_second"]
        counts = {r["triangles"] for r in rows if r["status"] == "ok"}
        assert len(counts) == 1
        assert {r["backend"] for r in rows if r["algo"] == "forward"} == set(_backend.BACKENDS)

    def test_missing_n(self, capsys):
        assert run(["bench"], capsys)[0] == 2

    def test_unavailable_backend(self, capsys, monkeypatch):
        monkeypatch.setattr(_backend, "BACKENDS", {"python": _backend.BACKENDS["python"]})
        assert run(["bench", "--n", "10", "--p", "0.3", "--backend", "compiled"], capsys)[0] == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "holescope", "gen", "path", "3"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "3 2\n1 2\n2 3\n"
