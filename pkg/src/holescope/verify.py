"""Catalog of checkable claims about primitive holes, evaluated over graph corpora.

Every checker computes its two sides on separate code paths. The truth side
runs the brute-force oracle on the graph actually supplied. The formula side
uses closed forms or the forward algorithm on the graph the descriptor
denotes. A supplied graph that differs from its descriptor fails every
check it enters, because its reports could not be replayed from the
descriptor.
"""

from __future__ import annotations

import json
import random
import zlib
from collections import Counter, deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from pathlib import Path
from typing import Callable

from . import graph as gr
from . import jaco
from .graph import Graph
from .transforms import internal_vertices, line_graph, line_graph_h_formula, primitive_degree_line_vertex, total_graph
from .triangles import (
    count_triangles,
    degrees_from_triangles,
    girth,
    oracle_admits,
    primitive_degrees,
    triangles_oracle,
)

# h(T(C_3)), established by the oracle; 2n would give 6.
TOTAL_C3_TRIANGLES = 8

SUBGRAPH_SAMPLES = 20
PASS, FAIL, SKIP = "pass", "fail", "skip"


class Skip(Exception):
    """The input lies outside the claim's domain."""


# -- corpus ------------------------------------------------------------------


def canonical(descriptor: dict) -> str:
    return json.dumps(descriptor, sort_keys=True, separators=(",", ":"))


def descriptor_graph(desc: dict) -> Graph:
    fam = desc["family"]
    if fam in ("complete", "path", "cycle", "star"):
        return getattr(gr, fam)(desc["n"])
    if fam == "gnp":
        return gr.gnp(desc["n"], desc["p"], desc["seed"])
    if fam == "jaco":
        return jaco.build_jaco(desc["n"]).underlying
    if fam == "explicit":
        return gr.from_edge_list(desc["n"], desc["edges"])
    raise ValueError(f"unknown family {fam!r}")


@dataclass(frozen=True)
class CorpusItem:
    descriptor: dict
    graph: Graph

    @property
    def key(self) -> str:
        return canonical(self.descriptor)


def make_item(desc: dict) -> CorpusItem:
    return CorpusItem(desc, descriptor_graph(desc))


def explicit_item(G: Graph) -> CorpusItem:
    return CorpusItem({"family": "explicit", "n": G.n, "edges": G.edges().tolist()}, G)


def _int_range(text: str) -> range:
    lo, _, hi = text.partition("-")
    return range(int(lo), int(hi or lo) + 1)


def parse_corpus_spec(specs) -> list[CorpusItem]:
    """Expand generator specs into corpus items.

    ``complete:3-12``, ``path:2-12``, ``cycle:3-12``, ``star:1-8``,
    ``jaco:5-60`` and ``gnp:n=20,p=0.3,seeds=0-99``.
    """
    items = []
    for spec in specs:
        fam, _, args = spec.partition(":")
        if fam in ("complete", "path", "cycle", "star", "jaco"):
            try:
                orders = _int_range(args)
            except ValueError:
                raise ValueError(f"bad range in corpus spec {spec!r}") from None
            items.extend(make_item({"family": fam, "n": k}) for k in orders)
        elif fam == "gnp":
            try:
                kv = dict(part.split("=", 1) for part in args.split(","))
                n, p, seeds = int(kv["n"]), float(kv["p"]), _int_range(kv.get("seeds", "0"))
            except (KeyError, ValueError):
                raise ValueError(f"bad gnp corpus spec {spec!r}") from None
            items.extend(make_item({"family": "gnp", "n": n, "p": p, "seed": s}) for s in seeds)
        else:
            raise ValueError(f"unknown family in corpus spec {spec!r}")
    return items


DEFAULT_CORPUS = [
    "complete:1-12",
    "path:2-12",
    "cycle:3-12",
    "star:1-8",
    *(f"gnp:n={n},p={p},seeds=0-4" for n in (8, 12, 16, 20) for p in (0.1, 0.2, 0.3, 0.4, 0.6)),
    "jaco:5-60",
]


def default_corpus() -> list[CorpusItem]:
    return parse_corpus_spec(DEFAULT_CORPUS)


DESCRIPTOR_TAG = "descriptor: "


def write_corpus(items, directory) -> list[Path]:
    """One golden edge-list file per item, descriptor in a leading comment."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for k, item in enumerate(items):
        d = item.descriptor
        tag = "_".join(str(d[x]) for x in ("family", "n", "p", "seed") if x in d)
        p = directory / f"{k:04d}_{tag}.txt"
        gr.write_edge_list(item.graph, p, [DESCRIPTOR_TAG + canonical(d)])
        paths.append(p)
    return paths


def load_corpus(directory) -> list[CorpusItem]:
    items = []
    for p in sorted(Path(directory).glob("*.txt")):
        text = p.read_text(encoding="ascii")
        desc = None
        for line in text.splitlines():
            if line.startswith("# " + DESCRIPTOR_TAG):
                desc = json.loads(line[len("# " + DESCRIPTOR_TAG) :])
                break
        G = gr.parse_edge_list(text)
        items.append(CorpusItem(desc, G) if desc else explicit_item(G))
    return items


# -- evaluation context --------------------------------------------------------


class Context:
    """Per-item cache. ``G`` is the supplied graph, ``D`` the descriptor's."""

    def __init__(self, item: CorpusItem):
        self.item = item
        self.desc = item.descriptor
        self.G = item.graph
        self.D = descriptor_graph(self.desc)

    @property
    def family(self) -> str:
        return self.desc["family"]

    def order(self, family: str, minimum: int) -> int:
        if self.family != family:
            raise Skip(f"applies to the {family} family only")
        n = self.desc["n"]
        if n < minimum:
            raise Skip(f"stated for n >= {minimum}")
        return n

    def need_oracle(self, G: Graph, what: str = "input") -> None:
        if not oracle_admits(G):
            raise Skip(f"{what} has n={G.n}, beyond the oracle size guard")

    def rng(self, salt: str) -> random.Random:
        return random.Random(zlib.crc32((salt + self.item.key).encode()))

    @cached_property
    def tri(self) -> list:
        self.need_oracle(self.G)
        return triangles_oracle(self.G)

    @cached_property
    def h_true(self) -> int:
        return len(self.tri)

    @cached_property
    def line(self):
        L = line_graph(self.G)
        self.need_oracle(L.graph, "line graph")
        return L

    @cached_property
    def h_line(self) -> int:
        return len(triangles_oracle(self.line.graph))

    @cached_property
    def total(self):
        T = total_graph(self.G)
        self.need_oracle(T.graph, "total graph")
        return T

    @cached_property
    def h_total(self) -> int:
        return len(triangles_oracle(self.total.graph))

    @cached_property
    def jaco(self) -> jaco.JacoGraph:
        return jaco.build_jaco(self.desc["n"])


@dataclass
class Outcome:
    passed: bool
    lhs: object
    rhs: object
    witness: dict | None = None
    literal: dict | None = None
    note: str | None = None


# -- checkers ----------------------------------------------------------------


def _hole_kn(c: Context) -> Outcome:
    n = c.order("complete", 1)
    return Outcome(c.h_true == comb(n, 3), c.h_true, comb(n, 3))


def _hole_subgraph(c: Context) -> Outcome:
    G = c.G
    h_full = count_triangles(c.D)
    c.need_oracle(G)
    rng = c.rng("subgraph")
    worst = 0
    for _ in range(SUBGRAPH_SAMPLES):
        size = rng.randint(0, G.n)
        S = sorted(rng.sample(range(1, G.n + 1), size))
        hs = len(triangles_oracle(gr.induced_subgraph(G, S)))
        worst = max(worst, hs)
        if hs > h_full:
            return Outcome(False, hs, h_full, {"kind": "induced", "subset": S})
    edges = G.edge_list()
    for e in rng.sample(edges, min(SUBGRAPH_SAMPLES, len(edges))):
        he = len(triangles_oracle(gr.delete_edge(G, e)))
        worst = max(worst, he)
        if he > h_full:
            return Outcome(False, he, h_full, {"kind": "edge-deletion", "edge": list(e)})
    dp = primitive_degrees(c.D)
    for v in rng.sample(range(1, G.n + 1), min(SUBGRAPH_SAMPLES, G.n)):
        hv = len(triangles_oracle(gr.delete_vertex(G, v)))
        if h_full - hv != dp[v]:
            relabel = {u: u - (u > v) for u in range(1, G.n + 1) if u != v}
            return Outcome(
                False,
                h_full - hv,
                dp[v],
                {"kind": "vertex-accounting", "vertex": v, "relabel": relabel},
            )
    return Outcome(True, worst, h_full)


def _hole_bound(c: Context) -> Outcome:
    top = comb(c.D.n, 3)
    return Outcome(0 <= c.h_true <= top, c.h_true, top)


def _hole_edge_bound(c: Context) -> Outcome:
    n, m = c.D.n, c.D.m
    lhs, rhs = 3 * c.h_true, max(n - 2, 0) * m
    literal = {"lhs": c.h_true, "rhs": m, "holds": c.h_true <= m, "strict_holds": m == 0 or c.h_true < m}
    return Outcome(lhs <= rhs, lhs, rhs, literal=literal)


def _line_chain(c: Context) -> Outcome:
    lhs = count_triangles(c.D)
    return Outcome(lhs <= c.h_line, lhs, c.h_line)


def _line_formula(c: Context) -> Outcome:
    rhs = line_graph_h_formula(c.D)
    return Outcome(c.h_line == rhs, c.h_line, rhs)


def _total_chain(c: Context) -> Outcome:
    hg = count_triangles(c.D)
    ok = hg <= c.h_line <= c.h_total
    return Outcome(ok, [hg, c.h_line], c.h_total)


def _total_edge_bound(c: Context) -> Outcome:
    m, ht = c.D.m, c.h_total
    strict_required = c.D.n >= 3 and gr.is_connected(c.D)
    ok = m < ht if strict_required else m <= ht
    return Outcome(ok, m, ht, note="strict" if strict_required else "weak")


def _total_equality_iff(c: Context) -> Outcome:
    equal = c.h_total == c.D.m
    no_internal = not internal_vertices(c.D)
    note = "equality branch" if no_internal else "strict branch"
    return Outcome(equal == no_internal, equal, no_internal, note=note)


def _total_path_cycle(c: Context) -> Outcome:
    fam, n = c.family, c.desc["n"]
    if fam == "path" and n >= 3:
        rhs = 2 * n - 3
    elif fam == "cycle" and n >= 4:
        rhs = 2 * n
    elif fam == "cycle" and n == 3:
        rhs = TOTAL_C3_TRIANGLES
        lit = {"lhs": c.h_total, "rhs": 2 * n, "holds": c.h_total == 2 * n}
        return Outcome(c.h_total == rhs, c.h_total, rhs, literal=lit, note="C_3 regression constant")
    else:
        raise Skip("applies to paths with n >= 3 and cycles")
    return Outcome(c.h_total == rhs, c.h_total, rhs)


def _jaco_recursion(c: Context) -> Outcome:
    n = c.order("jaco", 5)
    rhs = jaco.h_recursive(n)
    return Outcome(c.h_true == rhs, c.h_true, rhs)


def _pdeg_vector_check(c: Context, expected: int) -> Outcome:
    dp = degrees_from_triangles(c.G.n, c.tri)
    for v, got in enumerate(dp, start=1):
        if got != expected:
            return Outcome(False, got, expected, {"vertex": v})
    return Outcome(True, sorted(set(dp)), expected)


def _pdeg_kn(c: Context) -> Outcome:
    n = c.order("complete", 3)
    return _pdeg_vector_check(c, sum(range(1, n - 1)))


def _pdeg_kn_recurrence(c: Context) -> Outcome:
    n = c.order("complete", 4)
    return _pdeg_vector_check(c, primitive_degrees(gr.complete(n - 1))[1] + (n - 2))


def _pdeg_line(c: Context) -> Outcome:
    if c.G.m == 0:
        raise Skip("line graph is empty")
    L = c.line
    dp = degrees_from_triangles(L.graph.n, triangles_oracle(L.graph))
    total_l = total_r = 0
    for k, lab in enumerate(L.labels, start=1):
        try:
            want = primitive_degree_line_vertex(c.D, (lab.u, lab.v))
        except gr.GraphError:
            want = None
        if dp[k] != want:
            return Outcome(False, dp[k], want, {"edge": [lab.u, lab.v]})
        total_l += dp[k]
        total_r += want
    return Outcome(True, total_l, total_r)


def _kn_telescope(c: Context) -> Outcome:
    n = c.order("complete", 4)
    rhs = sum(primitive_degrees(gr.complete(i))[1] for i in range(3, n + 1))
    return Outcome(c.h_true == rhs, c.h_true, rhs)


def _jaco_outdeg(c: Context) -> Outcome:
    c.order("jaco", 5)
    rhs = jaco.h_outdegree_pairs(c.jaco)
    lit = jaco.h_outdegree(c.jaco)
    return Outcome(c.h_true == rhs, c.h_true, rhs, literal={"lhs": c.h_true, "rhs": lit, "holds": c.h_true == lit})


def _handshake(c: Context) -> Outcome:
    lhs = primitive_degrees(c.D).total()
    return Outcome(lhs == 3 * c.h_true, lhs, 3 * c.h_true)


def _jaco_closed(c: Context) -> Outcome:
    c.order("jaco", 5)
    rhs = jaco.h_closed_pairs(c.jaco)
    lit = jaco.h_closed(c.jaco)
    return Outcome(c.h_true == rhs, c.h_true, rhs, literal={"lhs": c.h_true, "rhs": lit, "holds": c.h_true == lit})


def girth_bruteforce(G: Graph) -> list[int]:
    """Per-component girth by deleting each edge and measuring the detour between its ends."""
    adj = [set()] + [set(r) for r in G.adjacency]
    best = {}
    for u, v in G.edge_list():
        dist = {u: 0}
        queue = deque([u])
        while queue and v not in dist:
            x = queue.popleft()
            for y in adj[x]:
                if (x, y) in ((u, v), (v, u)) or y in dist:
                    continue
                dist[y] = dist[x] + 1
                queue.append(y)
        if v in dist:
            best[u] = min(best.get(u, dist[v] + 1), dist[v] + 1)
    out = []
    for comp in gr.components(G):
        found = [best[x] for x in comp if x in best]
        out.append(min(found) if found else 0)
    return out


def _girth_convention(c: Context) -> Outcome:
    c.need_oracle(c.G)
    per = girth_bruteforce(c.G)
    lhs = girth(c.D, "paper")
    rhs = sum(per)
    ok = lhs == rhs and (lhs == 0) == (not any(per))
    return Outcome(ok, lhs, rhs, note=f"component girths {per}")


# -- catalog -------------------------------------------------------------------


@dataclass(frozen=True)
class Claim:
    id: str
    statement: str
    citation: str
    quote: str
    checker: Callable[[Context], Outcome] = field(repr=False)
    erratum: str | None = None


CATALOG = [
    Claim("HOLE-KN", "h(K_n) = C(n, 3)", "proposition on complete graphs", r"$h(K_n)=\binom{n}{3}$", _hole_kn),
    Claim(
        "HOLE-SUBGRAPH",
        "h(H) <= h(G) for induced subgraphs and edge deletions; h(G) - h(G - v) = d^p(v)",
        "proposition on subgraphs",
        r"$h(H)\le h(G)$",
        _hole_subgraph,
    ),
    Claim("HOLE-BOUND", "0 <= h(G) <= C(n, 3)", "theorem on the range of h", r"$0\le h(G)\le \binom{n}{3}$", _hole_bound),
    Claim(
        "HOLE-EDGE-BOUND",
        "3 h(G) <= (n - 2) |E(G)|",
        "lemma on graph size",
        r"$h(G)\le|E(G)|$",
        _hole_edge_bound,
        erratum="h(G) <= |E(G)| is false from K_6 on (h = 20 > 15 = |E|) and its strict form fails at K_5;"
        " checked instead: every edge lies in at most n - 2 triangles",
    ),
    Claim("LINE-CHAIN", "h(G) <= h(L(G))", "theorem on line graphs", r"$h(G)\le h(L(G))$", _line_chain),
    Claim(
        "LINE-FORMULA",
        "h(L(G)) = h(G) + sum over vertices of C(d(v), 3)",
        "line-graph theorem, star case",
        r"$h(L(G))= h(G)+\sum\limits_{v\in V'}\binom{d(v)}{3}$",
        _line_formula,
    ),
    Claim(
        "TOTAL-CHAIN",
        "h(G) <= h(L(G)) <= h(T(G))",
        "lemma on line and total graphs",
        r"$h(G)\le h(L(G)) \le h(T(G))$",
        _total_chain,
    ),
    Claim(
        "TOTAL-EDGE-BOUND",
        "|E(G)| <= h(T(G)), strict for connected G on 3 or more vertices",
        "theorem and corollary on total graphs",
        r"$|E(G)|\le h(T(G))$",
        _total_edge_bound,
    ),
    Claim(
        "TOTAL-EQUALITY-IFF",
        "h(T(G)) = |E(G)| iff G has no vertex of degree >= 2",
        "theorem on total-graph equality",
        r"$h(T(G))=|E(G)|$",
        _total_equality_iff,
    ),
    Claim(
        "TOTAL-PATH-CYCLE",
        "h(T(P_n)) = 2n - 3 for n >= 3; h(T(C_n)) = 2n for n >= 4; h(T(C_3)) = 8",
        "total-graph theorem, bounded-degree case",
        r"$h(G)=2n-3$ ... $h(G)=2n$",
        _total_path_cycle,
        erratum="the counts are of h(T(G)), not h(G); 2n fails for C_3, whose total graph has 8 triangles",
    ),
    Claim(
        "JACO-RECURSION",
        "h(J*_{k+1}) = h(J*_k) + C(k - i, 2), i the prime Jaconian vertex of J_k",
        "theorem on underlying Jaco graphs",
        r"$h(J^{\ast}_{n+1}(1)) = h(J^{\ast}_n(1)) + \sum\limits_{j=1}^{(n-i)-1}(n-i)-j$",
        _jaco_recursion,
    ),
    Claim(
        "PDEG-KN",
        "d^p(v) = 1 + 2 + ... + (n - 2) in K_n",
        "theorem on primitive degrees of complete graphs",
        r"$\sum\limits_{i=1}^{n-2}i$",
        _pdeg_kn,
    ),
    Claim(
        "PDEG-LINE",
        "d^p_L(G)(e) = triangles through e + C(d(u) - 1, 2) + C(d(v) - 1, 2)",
        "theorem on primitive degrees of line graphs",
        r"$\varLambda + \binom{d(v_i)-1}{2}+ \binom{d(v_j)-1}{2}$",
        _pdeg_line,
    ),
    Claim(
        "PDEG-KN-RECURRENCE",
        "d^p_{K_n}(v) = d^p_{K_{n-1}}(u) + (n - 2)",
        "proposition on complete-graph recurrence",
        r"$d^p_{K_n}(v)= d^p_{K_{n-1}}(u)+(n-2)$",
        _pdeg_kn_recurrence,
    ),
    Claim(
        "JACO-OUTDEG",
        "h(J*_n) = sum over v of C(d^+(v), 2)",
        "theorem on Jaco out-degrees",
        r"$h(J_n(1))=\sum (d^+_{J_n(1)}(v_j)-1)$",
        _jaco_outdeg,
        erratum="sum of (d^+ - 1) over d^+ >= 2 matches only n = 5, 6 (n = 7: 4 against 5);"
        " checked instead: sum of C(d^+, 2), since out-neighbourhoods are cliques",
    ),
    Claim(
        "KN-TELESCOPE",
        "h(K_n) = sum_{i=3..n} d^p_{K_i}(v)",
        "proposition on complete-graph telescoping",
        r"$h(K_n)=\sum\limits_{i=3}^{n}d^p_{K_i}(v)$",
        _kn_telescope,
    ),
    Claim(
        "HANDSHAKE",
        "sum of d^p(v) = 3 h(G)",
        "theorem relating h and primitive degrees",
        r"$h(G)=\frac{1}{3}\sum\limits_{v \in V(G)} d^p_{G}(v)$",
        _handshake,
    ),
    Claim(
        "JACO-CLOSED",
        "h(J*_n) = C(n - i, 3) + sum_{j <= i} C(d^+(v_j), 2)",
        "theorem on the Jaco closed form",
        r"$h(J^{\ast}_n(1)) = \binom{n-i}{3} + \sum\limits(d^+_{J_n(1)}(v_j)-1)$",
        _jaco_closed,
        erratum="the (d^+ - 1) summand matches only n = 5, 6 (n = 7: 4 against 5);"
        " checked instead with C(d^+, 2) per vertex up to the prime Jaconian vertex",
    ),
    Claim(
        "GIRTH-CONVENTION",
        "girth of an acyclic graph is 0; girth of a disjoint union is the sum",
        "girth conventions",
        r"$g(\bigcup G_i) = \sum g(G_i)$",
        _girth_convention,
    ),
]

CLAIMS = {c.id: c for c in CATALOG}
THEOREM_IDS = tuple(CLAIMS)


# -- reports -------------------------------------------------------------------


@dataclass
class TheoremReport:
    id: str
    statement: str
    citation: str
    quote: str
    input: dict
    outcome: str
    lhs: object = None
    rhs: object = None
    witness: dict | None = None
    erratum: str | None = None
    literal: dict | None = None
    note: str | None = None

    @property
    def passed(self) -> bool:
        return self.outcome == PASS

    def to_dict(self) -> dict:
        d = {
            "id": self.id,
            "statement": self.statement,
            "citation": self.citation,
            "quote": self.quote,
            "input": self.input,
        }
        if self.outcome == SKIP:
            d["skip"] = self.note
        else:
            d["pass"] = self.outcome == PASS
            d["lhs"] = self.lhs
            d["rhs"] = self.rhs
            if self.witness is not None:
                d["witness"] = self.witness
            if self.note:
                d["note"] = self.note
        if self.erratum:
            d["erratum"] = True
            d["erratum_note"] = self.erratum
            if self.literal is not None:
                d["literal"] = self.literal
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _graph_diff(G: Graph, D: Graph) -> dict:
    g, d = set(G.edge_list()), set(D.edge_list())
    return {
        "added": sorted(map(list, g - d)),
        "removed": sorted(map(list, d - g)),
        "n_supplied": G.n,
        "n_descriptor": D.n,
    }


def _evaluate(claim: Claim, ctx: Context) -> TheoremReport:
    report = TheoremReport(claim.id, claim.statement, claim.citation, claim.quote, ctx.desc, SKIP, erratum=claim.erratum)
    mismatch = ctx.G != ctx.D
    try:
        out = claim.checker(ctx)
    except Skip as exc:
        report.note = str(exc)
        return report
    except gr.GraphError as exc:
        if not mismatch:
            raise
        out = Outcome(False, None, None, note=str(exc))
    report.outcome = PASS if out.passed else FAIL
    report.lhs, report.rhs, report.literal, report.note = out.lhs, out.rhs, out.literal, out.note
    witness = out.witness
    if mismatch:
        report.outcome = FAIL
        witness = dict(witness or {}, descriptor_mismatch=_graph_diff(ctx.G, ctx.D))
    if report.outcome == FAIL:
        report.witness = dict(witness or {}, graph=ctx.G.to_text())
    return report


def _subject_item(claim_id: str, subject) -> CorpusItem:
    if isinstance(subject, CorpusItem):
        return subject
    if isinstance(subject, Graph):
        return explicit_item(subject)
    if isinstance(subject, dict):
        return make_item(subject)
    if isinstance(subject, int):
        fam = "jaco" if claim_id.startswith("JACO") else "complete"
        return make_item({"family": fam, "n": subject})
    raise TypeError(f"cannot check {type(subject).__name__}")


def check(claim_id: str, subject) -> TheoremReport:
    """Evaluate one claim on a corpus item, descriptor, graph, or order.

    A bare integer means ``K_n``, or ``J_n(1)`` for the JACO claims.
    """
    try:
        claim = CLAIMS[claim_id]
    except KeyError:
        raise ValueError(f"unknown theorem id {claim_id!r}") from None
    return _evaluate(claim, Context(_subject_item(claim_id, subject)))


def _check_item(item: CorpusItem, ids) -> list[TheoremReport]:
    ctx = Context(item)
    return [_evaluate(CLAIMS[i], ctx) for i in ids]


def run_suite(items, ids=None, threads: int = 1) -> list[TheoremReport]:
    """Every selected claim over every item, ordered by catalog position then corpus position."""
    ids = list(ids or THEOREM_IDS)
    order = {cid: k for k, cid in enumerate(THEOREM_IDS)}
    ids.sort(key=order.__getitem__)
    items = list(items)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            per_item = list(pool.map(lambda it: _check_item(it, ids), items))
    else:
        per_item = [_check_item(it, ids) for it in items]
    indexed = [(order[r.id], k, r) for k, reps in enumerate(per_item) for r in reps]
    indexed.sort(key=lambda t: (t[0], t[1]))
    return [r for _, _, r in indexed]


def summarize(reports) -> dict:
    """``{id: {"pass": p, "fail": f, "skip": s}}`` in catalog order."""
    counts = Counter((r.id, r.outcome) for r in reports)
    return {cid: {o: counts[(cid, o)] for o in (PASS, FAIL, SKIP)} for cid in THEOREM_IDS}
