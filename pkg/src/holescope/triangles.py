"""Triangle enumeration, primitive hole number, primitive degrees and girth.

Two independent enumerators are provided. :func:`triangles_oracle` checks
every vertex triple against the adjacency sets and is the ground truth for
everything else. :func:`triangles_forward` is the degree-ordered forward
algorithm running on the selected kernel backend.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from . import _backend
from .graph import Graph, components

Triangle = tuple  # (a, b, c) with a < b < c

DEFAULT_ORACLE_MAX_N = 512
INFINITY = math.inf

TIE_BREAKS = ("index", "reverse")
GIRTH_CONVENTIONS = ("paper", "infinity")


class OracleSizeError(ValueError):
    """Input too large for the brute-force oracle under the current guard."""


def oracle_limit() -> int:
    """Size guard for the oracle; ``HOLESCOPE_MAX_N`` overrides the default."""
    raw = os.environ.get("HOLESCOPE_MAX_N")
    if raw is None:
        return DEFAULT_ORACLE_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"HOLESCOPE_MAX_N must be an integer, got {raw!r}") from None


def oracle_admits(G: Graph, max_n: int | None = None) -> bool:
    return G.n <= (oracle_limit() if max_n is None else max_n)


def triangles_oracle(G: Graph, max_n: int | None = None) -> list[Triangle]:
    """All triples ``a < b < c`` whose three edges are present, in lexicographic order."""
    if not oracle_admits(G, max_n):
        limit = oracle_limit() if max_n is None else max_n
        raise OracleSizeError(f"oracle refuses n={G.n} > {limit} (set HOLESCOPE_MAX_N)")
    n = G.n
    adj = [frozenset()] + [frozenset(row) for row in G.adjacency]
    found = []
    for a in range(1, n + 1):
        na = adj[a]
        for b in range(a + 1, n + 1):
            if b not in na:
                continue
            nb = adj[b]
            for c in range(b + 1, n + 1):
                if c in na and c in nb:
                    found.append((a, b, c))
    return found


def vertex_rank(G: Graph, tie_break: str = "index") -> np.ndarray:
    """Position of each vertex in (degree, index) order; ``reverse`` flips the index tie-break."""
    if tie_break not in TIE_BREAKS:
        raise ValueError(f"tie_break must be one of {TIE_BREAKS}")
    idx = np.arange(G.n + 1, dtype=np.int64)
    key = idx if tie_break == "index" else -idx
    order = np.lexsort((key, G.degrees()))
    rank = np.empty(G.n + 1, dtype=np.int64)
    rank[order] = idx
    return rank


def triangle_array(G: Graph, tie_break: str = "index", backend: str | None = None) -> np.ndarray:
    """Forward-algorithm triangles as a sorted ``(h, 3)`` array."""
    kern = _backend.get(backend)
    tri = kern.forward_triangles(G.n, G.indptr, G.indices, vertex_rank(G, tie_break))
    if len(tri) == 0:
        return np.empty((0, 3), dtype=np.int64)
    tri = np.sort(tri, axis=1)
    return tri[np.lexsort((tri[:, 2], tri[:, 1], tri[:, 0]))]


def triangles_forward(G: Graph, tie_break: str = "index", backend: str | None = None) -> list[Triangle]:
    return [tuple(t) for t in triangle_array(G, tie_break, backend).tolist()]


def count_triangles(G: Graph, tie_break: str = "index", backend: str | None = None) -> int:
    """Triangle count without materialising the list."""
    kern = _backend.get(backend)
    return int(kern.forward_count(G.n, G.indptr, G.indices, vertex_rank(G, tie_break)))


def h(G: Graph) -> int:
    """Primitive hole number: the number of triangles in ``G``."""
    return count_triangles(G)


@dataclass(frozen=True)
class PrimitiveDegreeVector:
    """Triangle-incidence count per vertex, indexed ``1..n``."""

    values: tuple

    def __getitem__(self, v: int) -> int:
        if not 1 <= v <= len(self.values):
            raise IndexError(f"vertex {v} out of range 1..{len(self.values)}")
        return self.values[v - 1]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def total(self) -> int:
        return sum(self.values)


def degrees_from_triangles(n: int, tris) -> PrimitiveDegreeVector:
    arr = np.asarray(tris, dtype=np.int64).reshape(-1)
    counts = np.bincount(arr, minlength=n + 1)[1:]
    return PrimitiveDegreeVector(tuple(int(c) for c in counts))


def primitive_degrees(G: Graph, oracle: bool = False) -> PrimitiveDegreeVector:
    tris = triangles_oracle(G) if oracle else triangle_array(G)
    return degrees_from_triangles(G.n, tris)


def component_girths(G: Graph, backend: str | None = None) -> list[int]:
    """Shortest cycle length of each component (0 if acyclic), components by smallest member."""
    comps = components(G)
    comp = np.zeros(G.n + 1, dtype=np.int64)
    for k, members in enumerate(comps):
        comp[list(members)] = k
    kern = _backend.get(backend)
    return [int(x) for x in kern.bfs_girth(G.n, G.indptr, G.indices, comp, len(comps))]


def girth(G: Graph, convention: str = "paper", backend: str | None = None):
    """Length of the shortest cycle.

    Under ``paper`` an acyclic component contributes 0 and the girths of the
    components are summed. Under ``infinity`` the minimum over cyclic
    components is returned, or :data:`INFINITY` for a forest.
    """
    if convention not in GIRTH_CONVENTIONS:
        raise ValueError(f"convention must be one of {GIRTH_CONVENTIONS}")
    per = component_girths(G, backend)
    if convention == "paper":
        return sum(per)
    cyclic = [g for g in per if g]
    return min(cyclic) if cyclic else INFINITY


def has_primitive_hole(G: Graph) -> bool:
    return count_triangles(G) > 0


def format_triangles(tris) -> str:
    """One ``a b c`` line per triangle, lexicographically sorted."""
    rows = sorted(tuple(int(x) for x in t) for t in tris)
    return "".join(f"{a} {b} {c}\n" for a, b, c in rows)
