"""Command-line front end.

Exit codes: 0 success, 1 data error, 2 usage error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import _backend, bench, graph as gr, jaco, verify
from .transforms import line_graph, total_graph
from .triangles import (
    GIRTH_CONVENTIONS,
    INFINITY,
    OracleSizeError,
    count_triangles,
    degrees_from_triangles,
    format_triangles,
    girth,
    triangles_forward,
    triangles_oracle,
)

EXIT_OK, EXIT_DATA, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3


class DataError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_graph(path: str) -> gr.Graph:
    try:
        return gr.read_edge_list(path)
    except gr.EdgeListError as exc:
        raise DataError(f"{path}: {exc}") from None
    except (OSError, UnicodeDecodeError) as exc:
        raise DataError(f"{path}: {exc}") from None


# -- gen ---------------------------------------------------------------------


def cmd_gen(args, parser) -> int:
    fam, params = args.family, args.params
    try:
        if fam == "gnp":
            if len(params) != 2:
                parser.error("gen gnp takes N P")
            G = gr.gnp(int(params[0]), float(params[1]), args.seed)
        else:
            if len(params) != 1:
                parser.error(f"gen {fam} takes N")
            G = getattr(gr, fam)(int(params[0]))
    except (ValueError, gr.GraphError) as exc:
        parser.error(str(exc))
    _emit(G.to_text(), args.out)
    return EXIT_OK


# -- analyze -------------------------------------------------------------------


def _girth_value(g):
    return "infinity" if g == INFINITY else g


def cmd_analyze(args, parser) -> int:
    G = _read_graph(args.input)
    want_any = args.holes or args.pdeg or args.girth or args.list_triangles
    holes = args.holes or not want_any
    need_list = args.pdeg or args.list_triangles or (holes and args.oracle)
    tris = None
    if need_list:
        try:
            tris = triangles_oracle(G) if args.oracle else triangles_forward(G)
        except OracleSizeError as exc:
            raise DataError(str(exc)) from None
    report = {"n": G.n, "m": G.m}
    if holes:
        report["h"] = len(tris) if tris is not None else count_triangles(G)
    if args.pdeg:
        report["pdeg"] = list(degrees_from_triangles(G.n, tris))
    if args.girth:
        report["girth"] = _girth_value(girth(G, args.girth_convention))
    if args.list_triangles:
        report["triangles"] = [list(t) for t in tris]

    if args.json:
        _emit(json.dumps(report, sort_keys=True) + "\n", args.out)
        return EXIT_OK
    lines = [f"n {G.n}", f"m {G.m}"]
    if "h" in report:
        lines.append(f"h {report['h']}")
    if "pdeg" in report:
        lines.append("pdeg " + " ".join(map(str, report["pdeg"])))
    if "girth" in report:
        lines.append(f"girth {report['girth']}")
    text = "\n".join(lines) + "\n"
    if args.list_triangles:
        text += f"triangles {len(tris)}\n" + format_triangles(tris)
    _emit(text, args.out)
    return EXIT_OK


# -- line / total --------------------------------------------------------------


def _derived(args, build) -> int:
    LG = build(_read_graph(args.input))
    if args.json:
        doc = {
            "n": LG.graph.n,
            "m": LG.graph.m,
            "edges": LG.graph.edges().tolist(),
            "labels": [str(lab) for lab in LG.labels],
            "source_signature": LG.source_signature,
        }
        _emit(json.dumps(doc, sort_keys=True) + "\n", args.out)
    else:
        _emit(LG.to_text(), args.out)
    return EXIT_OK


def cmd_line(args, parser) -> int:
    return _derived(args, line_graph)


def cmd_total(args, parser) -> int:
    return _derived(args, total_graph)


# -- jaco --------------------------------------------------------------------


def cmd_jaco(args, parser) -> int:
    if args.n < 1:
        parser.error("jaco order must be >= 1")
    J = jaco.build_jaco(args.n)
    meta = jaco.metadata(J)
    arcs = J.digraph.arcs()
    if args.json:
        _emit(json.dumps({"arcs": [list(a) for a in arcs], "metadata": meta}, sort_keys=True) + "\n", args.out)
        return EXIT_OK
    body = [f"{J.n} {len(arcs)}"] + [f"{u} {v}" for u, v in arcs]
    text = "\n".join(body) + "\n"
    if args.meta:
        _emit(json.dumps(meta, sort_keys=True, indent=2) + "\n", args.meta)
        _emit(text, args.out)
    else:
        _emit(text + "# metadata\n" + json.dumps(meta, sort_keys=True, indent=2) + "\n", args.out)
    return EXIT_OK


# -- verify ------------------------------------------------------------------


def _describe(desc: dict) -> str:
    if desc.get("family") == "explicit":
        return f"explicit n={desc['n']}"
    return " ".join(f"{k}={desc[k]}" for k in ("family", "n", "p", "seed") if k in desc)


def cmd_verify(args, parser) -> int:
    if not (args.default_corpus or args.corpus or args.spec):
        parser.error("verify needs --default-corpus, --corpus DIR or --spec")
    for cid in args.only or ():
        if cid not in verify.CLAIMS:
            parser.error(f"unknown theorem id {cid}")
    items = []
    try:
        if args.default_corpus:
            items += verify.default_corpus()
        if args.spec:
            items += verify.parse_corpus_spec(args.spec)
        if args.corpus:
            items += verify.load_corpus(args.corpus)
    except ValueError as exc:
        raise DataError(str(exc)) from None
    if args.write_corpus:
        verify.write_corpus(items, args.write_corpus)

    reports = verify.run_suite(items, args.only, threads=args.threads)
    summary = verify.summarize(reports)
    failed = sum(r.outcome == verify.FAIL for r in reports)
    out = []
    if args.json:
        out.extend(r.to_json() + "\n" for r in reports)
        out.append(json.dumps({"summary": summary, "failed": failed}, sort_keys=True) + "\n")
    else:
        for r in reports:
            if r.outcome == verify.SKIP and not args.show_skipped:
                continue
            mark = {"pass": "PASS", "fail": "FAIL", "skip": "SKIP"}[r.outcome]
            extra = f" lhs={r.lhs} rhs={r.rhs}" if r.outcome != verify.SKIP else f" ({r.note})"
            flag = " [erratum]" if r.erratum else ""
            out.append(f"{mark} {r.id} {_describe(r.input)}{extra}{flag}\n")
            if r.outcome == verify.FAIL and r.witness:
                w = {k: v for k, v in r.witness.items() if k != "graph"}
                out.append(f"     witness {json.dumps(w, sort_keys=True)}\n")
        out.append(f"{'id':<20} {'pass':>5} {'fail':>5} {'skip':>5}\n")
        for cid, c in summary.items():
            out.append(f"{cid:<20} {c['pass']:>5} {c['fail']:>5} {c['skip']:>5}\n")
        out.append(f"{len(items)} inputs, {failed} failures\n")
    _emit("".join(out), args.out)
    return EXIT_VERIFY if failed else EXIT_OK


# -- bench -------------------------------------------------------------------


def cmd_bench(args, parser) -> int:
    if args.n < 1:
        parser.error("--n must be >= 1")
    algos = ["forward", "oracle"] if args.algo == "both" else [args.algo]
    if args.backend == "all":
        backends = sorted(_backend.BACKENDS)
    elif args.backend == "default":
        backends = [_backend.DEFAULT]
    else:
        if args.backend not in _backend.BACKENDS:
            raise DataError(f"backend {args.backend} is not available")
        backends = [args.backend]
    try:
        G = bench.make_graph(args.family, args.n, args.m, args.p, args.seed)
    except (ValueError, gr.GraphError) as exc:
        parser.error(str(exc))
    rows = bench.run(G, args.family, algos, backends, args.repeat)
    _emit(bench.to_csv(rows), args.out)
    if any(r["agrees"] is False for r in rows):
        return EXIT_DATA
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="holescope", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a generated graph as an edge list")
    g.add_argument("family", choices=["complete", "path", "cycle", "star", "gnp"])
    g.add_argument("params", nargs="+")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--out")
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("analyze", help="primitive holes, primitive degrees, girth")
    a.add_argument("input")
    a.add_argument("--holes", action="store_true")
    a.add_argument("--pdeg", action="store_true")
    a.add_argument("--girth", action="store_true")
    a.add_argument("--girth-convention", choices=GIRTH_CONVENTIONS, default="paper")
    a.add_argument("--list-triangles", action="store_true")
    a.add_argument("--oracle", action="store_true", help="use the brute-force enumerator")
    a.add_argument("--json", action="store_true")
    a.add_argument("-o", "--out")
    a.set_defaults(func=cmd_analyze)

    for name, fn, text in (("line", cmd_line, "line graph"), ("total", cmd_total, "total graph")):
        s = sub.add_parser(name, help=f"{text} with element labels")
        s.add_argument("input")
        s.add_argument("--json", action="store_true")
        s.add_argument("-o", "--out")
        s.set_defaults(func=fn)

    j = sub.add_parser("jaco", help="Jaco graph J_n(1): arcs and metadata")
    j.add_argument("n", type=int)
    j.add_argument("--json", action="store_true")
    j.add_argument("-o", "--out", help="arc list destination")
    j.add_argument("--meta", help="write metadata JSON here instead of after the arcs")
    j.set_defaults(func=cmd_jaco)

    v = sub.add_parser("verify", help="evaluate the claim catalog over a corpus")
    v.add_argument("--default-corpus", action="store_true")
    v.add_argument("--corpus", metavar="DIR", help="directory of golden edge-list files")
    v.add_argument("--spec", action="append", metavar="SPEC", help="e.g. complete:3-12, gnp:n=20,p=0.3,seeds=0-9")
    v.add_argument("--only", action="append", metavar="ID")
    v.add_argument("--write-corpus", metavar="DIR")
    v.add_argument("--threads", type=int, default=1)
    v.add_argument("--show-skipped", action="store_true")
    v.add_argument("--json", action="store_true")
    v.add_argument("-o", "--out")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="time triangle counting; CSV output")
    b.add_argument("--family", choices=bench.FAMILIES, default="gnp")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--m", type=int)
    b.add_argument("--p", type=float)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--algo", choices=["forward", "oracle", "both"], default="forward")
    b.add_argument("--backend", default="default", help="default, compiled, python or all")
    b.add_argument("--repeat", type=int, default=1)
    b.add_argument("-o", "--out")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        parser.error("--threads must be >= 1")
    try:
        return args.func(args, parser)
    except DataError as exc:
        print(f"holescope: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
