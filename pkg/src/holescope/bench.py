"""Timing harness: oracle vs forward, compiled kernel vs pure-Python fallback.

Rows keep the deterministic columns (family .. agrees) apart from the timing
columns (seconds, triangles_per_second). Timings cover the counting call
only; generation is excluded.
"""

from __future__ import annotations

import csv
import io
import time
from math import comb

from . import _backend
from . import graph as gr
from .jaco import build_jaco
from .triangles import count_triangles, oracle_admits, triangles_oracle

FIELDS = ["family", "n", "m", "algo", "backend", "tie_break", "status", "triangles", "agrees", "seconds", "triangles_per_second"]
FAMILIES = ("gnp", "complete", "path", "cycle", "star", "jaco")


def make_graph(family: str, n: int, m: int | None = None, p: float | None = None, seed: int = 0):
    if family == "gnp":
        if p is None:
            if m is None:
                raise ValueError("gnp needs --m or --p")
            pairs = comb(n, 2)
            p = min(1.0, m / pairs) if pairs else 0.0
        return gr.gnp(n, p, seed)
    if family == "jaco":
        return build_jaco(n).underlying
    if family in FAMILIES:
        return getattr(gr, family)(n)
    raise ValueError(f"unknown family {family!r}")


def _timed(fn):
    t0 = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - t0


def run(G, family: str, algos=("forward",), backends=None, repeat: int = 1) -> list[dict]:
    """Benchmark rows for one graph; ``agrees`` compares each count to the first one."""
    backends = list(backends or [_backend.DEFAULT])
    rows = []
    reference = None
    for algo in algos:
        if algo == "forward":
            plan = [(b, tb) for b in backends for tb in ("index", "reverse")]
        elif algo == "oracle":
            plan = [("python", "-")]
        else:
            raise ValueError(f"unknown algo {algo!r}")
        for backend, tie in plan:
            row = {"family": family, "n": G.n, "m": G.m, "algo": algo, "backend": backend, "tie_break": tie}
            if algo == "oracle" and not oracle_admits(G):
                row.update(status="skipped", triangles="", agrees="", seconds="", triangles_per_second="")
                rows.append(row)
                continue
            best = None
            for _ in range(max(1, repeat)):
                if algo == "oracle":
                    count, secs = _timed(lambda: len(triangles_oracle(G)))
                else:
                    count, secs = _timed(lambda: count_triangles(G, tie, backend))
                best = secs if best is None else min(best, secs)
            if reference is None:
                reference = count
            row.update(
                status="ok",
                triangles=count,
                agrees=count == reference,
                seconds=f"{best:.6f}",
                triangles_per_second=f"{count / best:.1f}" if best > 0 else "",
            )
            rows.append(row)
    return rows


def to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()
