"""Compare the compiled triangle kernel against the pure-Python fallback.

Counts triangles of seeded gnp graphs at a range of sizes with both
backends, checks the counts agree, and prints a CSV with the speedup.

    python benchmarks/compare_backends.py --sizes 1000 10000 100000 --degree 20
"""

import argparse
import csv
import sys
import time
from math import comb

from holescope import _backend
from holescope import graph as gr
from holescope.triangles import count_triangles


def best_of(fn, repeat):
    best, value = None, None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return value, best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[1000, 10000, 100000])
    ap.add_argument("--degree", type=float, default=20.0, help="target average degree")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    if "compiled" not in _backend.BACKENDS:
        print("compiled extension not built; only the python backend is available", file=sys.stderr)
    backends = sorted(_backend.BACKENDS)

    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["n", "m", "triangles"] + [f"{b}_seconds" for b in backends] + ["speedup"])
    for n in args.sizes:
        p = min(1.0, args.degree * n / 2 / comb(n, 2))
        G = gr.gnp(n, p, args.seed)
        counts, secs = {}, {}
        for b in backends:
            counts[b], secs[b] = best_of(lambda: count_triangles(G, backend=b), args.repeat)
        if len(set(counts.values())) != 1:
            print(f"backends disagree at n={n}: {counts}", file=sys.stderr)
            return 1
        speedup = f"{secs['python'] / secs['compiled']:.1f}" if len(backends) == 2 else ""
        out.writerow([n, G.m, counts[backends[0]]] + [f"{secs[b]:.6f}" for b in backends] + [speedup])
    return 0


if __name__ == "__main__":
    sys.exit(main())
