import importlib.util
from pathlib import Path

import pytest

from holescope import _backend, bench
from holescope import graph as gr

SCRIPT = Path(__file__).resolve().parents[1] / "benchmarks" / "compare_backends.py"


class TestHarness:
    def test_make_graph_from_m(self):
        G = bench.make_graph("gnp", 200, m=1000, seed=1)
        assert abs(G.m - 1000) < 150

    def test_make_graph_needs_density(self):
        with pytest.raises(ValueError):
            bench.make_graph("gnp", 10)

    def test_rows_agree(self):
        rows = bench.run(gr.complete(8), "complete", ["forward", "oracle"], sorted(_backend.BACKENDS))
        assert {r["triangles"] for r in rows} == {56}
        assert all(r["agrees"] is True for r in rows)

    def test_oracle_skipped_beyond_guard(self, monkeypatch):
        monkeypatch.setenv("HOLESCOPE_MAX_N", "5")
        rows = bench.run(gr.complete(8), "complete", ["oracle"])
        assert rows[0]["status"] == "skipped"

    def test_deterministic_columns(self):
        G = gr.gnp(50, 0.2, 3)
        strip = lambda rows: [{k: r[k] for k in bench.FIELDS[:-2]} for r in rows]
        assert strip(bench.run(G, "gnp")) == strip(bench.run(G, "gnp"))

    def test_csv_header(self):
        text = bench.to_csv(bench.run(gr.cycle(5), "cycle"))
        assert text.splitlines()[0] == ",".join(bench.FIELDS)


def test_backend_selection():
    assert "python" in _backend.BACKENDS
    with pytest.raises(ValueError):
        _backend.get("fortran")


def test_compare_script(capsys):
    spec = importlib.util.spec_from_file_location("compare_backends", SCRIPT)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    assert mod.main(["--sizes", "300", "--repeat", "1"]) == 0
    header, row = capsys.readouterr().out.splitlines()
    assert header.startswith("n,m,triangles")
    assert row.startswith("300,")
