"""Simple undirected and directed graphs over vertices ``1..n``.

Both types store adjacency in CSR form with one padding row at index 0, so
the neighbours of vertex ``v`` are ``indices[indptr[v]:indptr[v + 1]]`` with
no index arithmetic. Arrays are made read-only; graphs are immutable values.
"""

from __future__ import annotations

import hashlib
from typing import Iterable, Sequence

import numpy as np

# Largest n for which C(n, 3) fits in a signed 64-bit count.
MAX_VERTICES = 2_642_245

VertexSet = tuple  # strictly increasing tuple of vertex indices


class GraphError(ValueError):
    """Invalid graph construction or reference to a missing element."""


class EdgeListError(ValueError):
    """Malformed edge-list text; ``line`` is the 1-based offending line."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def _check_n(n: int) -> int:
    n = int(n)
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    if n > MAX_VERTICES:
        raise GraphError(f"vertex count {n} exceeds MAX_VERTICES={MAX_VERTICES}")
    return n


def _as_pairs(edges) -> np.ndarray:
    arr = np.asarray(edges, dtype=np.int64)
    if arr.size == 0:
        return np.empty((0, 2), dtype=np.int64)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise GraphError("edges must be a sequence of (u, v) pairs")
    return arr


def _csr(n: int, heads: np.ndarray, tails: np.ndarray):
    """CSR arrays (with padding row 0) for arcs ``heads[k] -> tails[k]``.

    Rows come out sorted because arcs are lexsorted first.
    """
    order = np.lexsort((tails, heads))
    heads = heads[order]
    tails = tails[order]
    counts = np.bincount(heads, minlength=n + 1)
    indptr = np.zeros(n + 2, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    return _freeze(indptr), _freeze(tails.astype(np.int64, copy=True))


class Graph:
    """Simple undirected graph on vertices ``1..n``.

    Construct with :func:`from_edge_list` or one of the generators; the
    constructor trusts its arrays.
    """

    __slots__ = ("n", "indptr", "indices", "_edges")

    def __init__(self, n: int, indptr: np.ndarray, indices: np.ndarray):
        self.n = n
        self.indptr = indptr
        self.indices = indices
        self._edges = None

    @property
    def m(self) -> int:
        return len(self.indices) // 2

    def neighbors(self, v: int) -> np.ndarray:
        self._check_vertex(v)
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    @property
    def adjacency(self) -> list[list[int]]:
        """Per-vertex sorted neighbour lists; entry 0 is vertex 1."""
        ind = self.indices.tolist()
        ptr = self.indptr.tolist()
        return [ind[ptr[v] : ptr[v + 1]] for v in range(1, self.n + 1)]

    def degrees(self) -> np.ndarray:
        """Degree array indexed by vertex; slot 0 is padding."""
        return np.diff(self.indptr)

    def has_edge(self, u: int, v: int) -> bool:
        if not (1 <= u <= self.n and 1 <= v <= self.n):
            return False
        row = self.indices[self.indptr[u] : self.indptr[u + 1]]
        k = np.searchsorted(row, v)
        return bool(k < len(row) and row[k] == v)

    def edges(self) -> np.ndarray:
        """``(m, 2)`` array of edges ``u < v`` in lexicographic order."""
        if self._edges is None:
            heads = np.repeat(np.arange(self.n + 1, dtype=np.int64), self.degrees())
            keep = heads < self.indices
            self._edges = _freeze(np.column_stack((heads[keep], self.indices[keep])))
        return self._edges

    def edge_list(self) -> list[tuple[int, int]]:
        return [tuple(e) for e in self.edges().tolist()]

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise GraphError(f"vertex {v} not in 1..{self.n}")

    def to_text(self) -> str:
        return to_edge_list_text(self)

    def signature(self) -> str:
        return hashlib.sha256(self.to_text().encode("ascii")).hexdigest()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.indices, other.indices) and np.array_equal(
            self.indptr, other.indptr
        )

    def __hash__(self) -> int:
        return hash((self.n, self.indices.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Digraph:
    """Simple directed graph on ``1..n`` with cached degree tables."""

    __slots__ = ("n", "indptr", "indices", "in_degrees", "out_degrees")

    def __init__(self, n: int, indptr: np.ndarray, indices: np.ndarray):
        self.n = n
        self.indptr = indptr
        self.indices = indices
        self.out_degrees = _freeze(np.diff(indptr))
        self.in_degrees = _freeze(np.bincount(indices, minlength=n + 1).astype(np.int64))

    @property
    def num_arcs(self) -> int:
        return len(self.indices)

    def successors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def in_degree(self, v: int) -> int:
        return int(self.in_degrees[v])

    def out_degree(self, v: int) -> int:
        return int(self.out_degrees[v])

    def arcs(self) -> list[tuple[int, int]]:
        heads = np.repeat(np.arange(self.n + 1, dtype=np.int64), self.out_degrees)
        return list(zip(heads.tolist(), self.indices.tolist()))

    def has_arc(self, u: int, v: int) -> bool:
        if not 1 <= u <= self.n:
            return False
        return bool(np.isin(v, self.successors(u)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.indptr, other.indptr) and np.array_equal(
            self.indices, other.indices
        )

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.num_arcs})"


# -- construction ----------------------------------------------------------


def from_edge_list(n: int, edges) -> Graph:
    """Build a simple graph; repeated and reversed pairs collapse to one edge."""
    n = _check_n(n)
    arr = _as_pairs(edges)
    if len(arr):
        if arr.min() < 1 or arr.max() > n:
            bad = arr[((arr < 1) | (arr > n)).any(axis=1)][0]
            raise GraphError(f"edge ({bad[0]}, {bad[1]}) out of range 1..{n}")
        loops = arr[:, 0] == arr[:, 1]
        if loops.any():
            v = int(arr[loops][0, 0])
            raise GraphError(f"self-loop at vertex {v}")
    lo = np.minimum(arr[:, 0], arr[:, 1])
    hi = np.maximum(arr[:, 0], arr[:, 1])
    keys = np.unique(lo * (n + 1) + hi)
    lo, hi = keys // (n + 1), keys % (n + 1)
    indptr, indices = _csr(n, np.concatenate((lo, hi)), np.concatenate((hi, lo)))
    return Graph(n, indptr, indices)


def digraph_from_arcs(n: int, arcs) -> Digraph:
    n = _check_n(n)
    arr = _as_pairs(arcs)
    if len(arr):
        if arr.min() < 1 or arr.max() > n:
            raise GraphError(f"arc out of range 1..{n}")
        if (arr[:, 0] == arr[:, 1]).any():
            raise GraphError("self-loop arc")
    keys = arr[:, 0] * (n + 1) + arr[:, 1]
    if len(np.unique(keys)) != len(keys):
        raise GraphError("duplicate arc")
    indptr, indices = _csr(n, arr[:, 0].copy(), arr[:, 1].copy())
    return Digraph(n, indptr, indices)


def empty(n: int) -> Graph:
    return from_edge_list(n, [])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete(n) needs n >= 1")
    u, v = np.triu_indices(n, k=1)
    return from_edge_list(n, np.column_stack((u + 1, v + 1)))


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path(n) needs n >= 1")
    u = np.arange(1, n, dtype=np.int64)
    return from_edge_list(n, np.column_stack((u, u + 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle(n) needs n >= 3")
    u = np.arange(1, n + 1, dtype=np.int64)
    return from_edge_list(n, np.column_stack((u, u % n + 1)))


def star(n: int) -> Graph:
    """K_{1,n} on n + 1 vertices; vertex 1 is the centre."""
    if n < 1:
        raise GraphError("star(n) needs n >= 1")
    leaves = np.arange(2, n + 2, dtype=np.int64)
    return from_edge_list(n + 1, np.column_stack((np.ones_like(leaves), leaves)))


def _pair_offsets(n: int) -> np.ndarray:
    # offsets[u - 1] = lexicographic index of the pair (u, u + 1)
    u = np.arange(1, n + 1, dtype=np.int64)
    return (u - 1) * n - (u - 1) * u // 2


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) sample.

    Candidate pairs ``u < v`` are scanned in lexicographic order with
    geometric skipping (Batagelj-Brandes): each accepted edge consumes exactly
    one double from a PCG64 stream seeded with ``seed``, the gap before it
    being ``floor(log(1 - r) / log(1 - p))``. The output depends only on
    ``(n, p, seed)``, not on batch sizes.
    """
    n = _check_n(n)
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"probability must be in [0, 1], got {p}")
    total = n * (n - 1) // 2
    if p == 0.0 or total == 0:
        return empty(n)
    if p == 1.0:
        return complete(n)
    rng = np.random.Generator(np.random.PCG64(seed))
    log_q = np.log1p(-p)
    chunks = []
    pos = -1
    batch = max(64, int(total * p * 1.05) + 64)
    while pos < total:
        r = rng.random(batch)
        gaps = np.floor(np.log1p(-r) / log_q)
        gaps = np.minimum(gaps, float(total)).astype(np.int64) + 1
        positions = pos + np.cumsum(gaps)
        chunks.append(positions[positions < total])
        pos = int(positions[-1])
        batch = max(64, batch // 4)
    linear = np.concatenate(chunks)
    offsets = _pair_offsets(n)
    u = np.searchsorted(offsets, linear, side="right")
    v = linear - offsets[u - 1] + u + 1
    return from_edge_list(n, np.column_stack((u, v)))


# -- structural operations -------------------------------------------------


def vertex_set(members: Iterable[int], n: int) -> VertexSet:
    s = tuple(sorted(set(int(v) for v in members)))
    if s and (s[0] < 1 or s[-1] > n):
        raise GraphError(f"vertex set member out of range 1..{n}")
    return s


def induced_subgraph(G: Graph, S: Sequence[int]) -> Graph:
    """Subgraph induced by ``S``, relabelled ``1..|S|`` in the order given."""
    S = list(S)
    if len(set(S)) != len(S):
        raise GraphError("duplicate vertex in subset")
    for v in S:
        G._check_vertex(v)
    new = np.zeros(G.n + 1, dtype=np.int64)
    new[S] = np.arange(1, len(S) + 1)
    e = G.edges()
    if len(e):
        a, b = new[e[:, 0]], new[e[:, 1]]
        keep = (a > 0) & (b > 0)
        e = np.column_stack((a[keep], b[keep]))
    return from_edge_list(len(S), e)


def delete_vertex(G: Graph, v: int) -> Graph:
    G._check_vertex(v)
    return induced_subgraph(G, [u for u in range(1, G.n + 1) if u != v])


def delete_edge(G: Graph, edge: tuple[int, int]) -> Graph:
    u, v = sorted(edge)
    if not G.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) not in graph")
    e = G.edges()
    keep = ~((e[:, 0] == u) & (e[:, 1] == v))
    return from_edge_list(G.n, e[keep])


def add_edge(G: Graph, edge: tuple[int, int]) -> Graph:
    u, v = sorted(edge)
    if G.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) already present")
    return from_edge_list(G.n, np.vstack((G.edges(), [[u, v]])))


def disjoint_union(*graphs: Graph) -> Graph:
    """Union with the vertices of later graphs shifted past earlier ones."""
    parts, shift = [], 0
    for g in graphs:
        parts.append(g.edges() + shift)
        shift += g.n
    return from_edge_list(shift, np.vstack(parts) if parts else [])


def underlying(D: Digraph) -> Graph:
    heads = np.repeat(np.arange(D.n + 1, dtype=np.int64), D.out_degrees)
    return from_edge_list(D.n, np.column_stack((heads, D.indices)))


def degree(G: Graph, v: int) -> int:
    G._check_vertex(v)
    return int(G.indptr[v + 1] - G.indptr[v])


def max_degree(G: Graph) -> int:
    return int(G.degrees()[1:].max()) if G.n else 0


def components(G: Graph) -> list[VertexSet]:
    """Connected components ordered by smallest member."""
    label = np.zeros(G.n + 1, dtype=np.int64)
    ind, ptr = G.indices, G.indptr
    out = []
    for s in range(1, G.n + 1):
        if label[s]:
            continue
        label[s] = s
        stack, comp = [s], [s]
        while stack:
            u = stack.pop()
            for w in ind[ptr[u] : ptr[u + 1]].tolist():
                if not label[w]:
                    label[w] = s
                    stack.append(w)
                    comp.append(w)
        out.append(tuple(sorted(comp)))
    return out


def is_connected(G: Graph) -> bool:
    return len(components(G)) <= 1


# -- edge-list text format -------------------------------------------------


def to_edge_list_text(G: Graph, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{G.n} {G.m}")
    lines.extend(f"{u} {v}" for u, v in G.edges().tolist())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the canonical edge-list format.

    ``#`` lines are skipped. Edges must satisfy ``u < v``; the count on the
    header line must match. Ordering is not enforced on input.
    """
    header = None
    edges = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise EdgeListError("negative count in header", lineno)
            header = (a, b, lineno)
            continue
        n = header[0]
        if not (1 <= a <= n and 1 <= b <= n):
            raise EdgeListError(f"vertex out of range 1..{n}", lineno)
        if a >= b:
            raise EdgeListError(f"edge must satisfy u < v, got {a} {b}", lineno)
        edges.append((a, b))
    if header is None:
        raise EdgeListError("missing 'n m' header")
    n, m, hline = header
    if len(edges) != m:
        raise EdgeListError(f"header declares {m} edges, found {len(edges)}", hline)
    g = from_edge_list(n, edges)
    if g.m != m:
        raise EdgeListError("duplicate edge", hline)
    return g


def read_edge_list(path) -> Graph:
    with open(path, encoding="ascii") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(G: Graph, path, comments: Sequence[str] = ()) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(to_edge_list_text(G, comments))
