"""Line and total graphs with provenance labels, plus closed-form triangle counts."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .graph import Graph, GraphError, VertexSet, from_edge_list, parse_edge_list, to_edge_list_text
from .triangles import h


@dataclass(frozen=True, order=True)
class OriginalVertex:
    i: int

    def __str__(self) -> str:
        return f"v:{self.i}"


@dataclass(frozen=True, order=True)
class OriginalEdge:
    u: int
    v: int

    def __post_init__(self):
        if not self.u < self.v:
            raise GraphError(f"edge label needs u < v, got {self.u}-{self.v}")

    def __str__(self) -> str:
        return f"e:{self.u}-{self.v}"


ElementLabel = OriginalVertex | OriginalEdge


def parse_label(text: str) -> ElementLabel:
    kind, _, body = text.partition(":")
    try:
        if kind == "v":
            return OriginalVertex(int(body))
        if kind == "e":
            u, v = body.split("-")
            return OriginalEdge(int(u), int(v))
    except ValueError:
        pass
    raise ValueError(f"bad element label {text!r}")


@dataclass(frozen=True)
class LabeledGraph:
    """A derived graph whose vertex ``k`` stands for ``labels[k - 1]`` of the source."""

    graph: Graph
    labels: tuple
    source_signature: str

    def __post_init__(self):
        if len(self.labels) != self.graph.n:
            raise GraphError("label count must equal vertex count")
        if len(set(self.labels)) != len(self.labels):
            raise GraphError("labels must be distinct")

    def label(self, k: int) -> ElementLabel:
        return self.labels[k - 1]

    def index_of(self, label: ElementLabel) -> int:
        return self.labels.index(label) + 1

    def to_text(self) -> str:
        lines = [to_edge_list_text(self.graph, [f"source {self.source_signature}"]), "# labels\n"]
        lines.extend(f"{k} {lab}\n" for k, lab in enumerate(self.labels, start=1))
        return "".join(lines)


def parse_labeled_graph(text: str) -> LabeledGraph:
    head, sep, tail = text.partition("# labels\n")
    if not sep:
        raise ValueError("missing '# labels' block")
    graph = parse_edge_list(head)
    signature = ""
    for line in head.splitlines():
        if line.startswith("# source "):
            signature = line[len("# source ") :].strip()
    labels = []
    for k, line in enumerate(tail.splitlines(), start=1):
        idx, lab = line.split()
        if int(idx) != k:
            raise ValueError(f"label index {idx} out of order")
        labels.append(parse_label(lab))
    return LabeledGraph(graph, tuple(labels), signature)


def _incident_edge_ids(G: Graph) -> list[list[int]]:
    """Per vertex, the 0-based ids of incident edges in lexicographic edge order."""
    inc = [[] for _ in range(G.n + 1)]
    for k, (u, v) in enumerate(G.edges().tolist()):
        inc[u].append(k)
        inc[v].append(k)
    return inc


def _line_pairs(G: Graph) -> list[tuple[int, int]]:
    pairs = []
    for ids in _incident_edge_ids(G):
        pairs.extend(combinations(ids, 2))
    return pairs


def line_graph(G: Graph) -> LabeledGraph:
    """Vertex ``k`` is the ``k``-th edge of ``G``; adjacent when the edges share an endpoint."""
    edges = G.edge_list()
    pairs = np.array(_line_pairs(G), dtype=np.int64).reshape(-1, 2) + 1
    L = from_edge_list(len(edges), pairs)
    labels = tuple(OriginalEdge(u, v) for u, v in edges)
    return LabeledGraph(L, labels, G.signature())


def total_graph(G: Graph) -> LabeledGraph:
    """Vertices of ``G`` (``1..n``) followed by its edges (``n+1..n+m``)."""
    n = G.n
    E = G.edges()
    line = np.array(_line_pairs(G), dtype=np.int64).reshape(-1, 2) + n + 1
    eid = np.arange(len(E), dtype=np.int64) + n + 1
    incidence = np.vstack((np.column_stack((E[:, 0], eid)), np.column_stack((E[:, 1], eid))))
    T = from_edge_list(n + len(E), np.vstack((E, line, incidence)))
    labels = tuple(OriginalVertex(i) for i in range(1, n + 1)) + tuple(
        OriginalEdge(u, v) for u, v in E.tolist()
    )
    return LabeledGraph(T, labels, G.signature())


def line_graph_h_formula(G: Graph) -> int:
    """h(L(G)) from G alone: triangles of G plus C(d, 3) triples of edges meeting at each vertex."""
    return h(G) + sum(comb(int(d), 3) for d in G.degrees()[1:])


def total_graph_h_formula(G: Graph) -> int:
    """h(T(G)) from G alone.

    A triangle of T(G) uses three vertices (h(G)), three edges (h(L(G))), two
    endpoints and their edge (m), or one vertex and two edges at it
    (C(d, 2) per vertex).
    """
    d = [int(x) for x in G.degrees()[1:]]
    return line_graph_h_formula(G) + h(G) + G.m + sum(comb(x, 2) for x in d)


def common_neighbors(G: Graph, u: int, v: int) -> int:
    return len(np.intersect1d(G.neighbors(u), G.neighbors(v), assume_unique=True))


def primitive_degree_line_vertex(G: Graph, e: tuple[int, int]) -> int:
    """Triangles of L(G) at the vertex of edge ``e``: those of G through e, plus edge pairs at either end."""
    u, v = sorted(e)
    if not G.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) not in graph")
    du = len(G.neighbors(u))
    dv = len(G.neighbors(v))
    return common_neighbors(G, u, v) + comb(du - 1, 2) + comb(dv - 1, 2)


def internal_vertices(G: Graph) -> VertexSet:
    """Vertices of degree at least 2."""
    d = G.degrees()
    return tuple(int(v) for v in np.flatnonzero(d >= 2) if v >= 1)
