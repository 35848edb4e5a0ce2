"""Finite Jaco graphs J_n(1) and the primitive hole number of their underlying graphs.

Vertex ``v_i`` has arcs to ``v_{i+1}, ..., v_{2i - d^-(v_i)}``. In-arcs only
come from lower indices, so ``d^-(v_i)`` is fixed once ``v_1..v_{i-1}`` are
done, and truncating at ``n`` never changes it. Every out-neighbourhood is a
run of consecutive indices; we keep it as an interval.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from .graph import Digraph, Graph, VertexSet, digraph_from_arcs, underlying
from .triangles import h


class JacoDomainError(ValueError):
    """Order outside the range a formula is stated for."""


def _reach_table(n: int):
    """In-degrees and untruncated out-interval ends for v_1..v_n (index 0 unused)."""
    indeg = [0] * (n + 1)
    end = [0] * (n + 1)
    diff = [0] * (n + 2)
    running = 0
    for i in range(1, n + 1):
        running += diff[i]
        indeg[i] = running
        end[i] = 2 * i - running
        lo, hi = i + 1, min(end[i], n)
        if lo <= hi:
            diff[lo] += 1
            diff[hi + 1] -= 1
    return indeg, end


def _degrees_at(k: int, indeg, end) -> list[int]:
    # underlying degree of v_1..v_k inside J_k(1); index 0 unused
    return [0] + [indeg[j] + min(k, end[j]) - j for j in range(1, k + 1)]


def _prime_jaconian(degrees: list[int]) -> int:
    top = max(degrees[1:])
    return degrees.index(top, 1)


@dataclass(frozen=True)
class JacoGraph:
    n: int
    digraph: Digraph
    in_degree: tuple  # in_degree[i - 1] = d^-(v_i)
    out_degree: tuple
    delta: int
    jaconian_set: VertexSet
    prime_jaconian: int
    hope_vertices: VertexSet
    underlying: Graph = field(repr=False)

    def d_in(self, i: int) -> int:
        return self.in_degree[i - 1]

    def d_out(self, i: int) -> int:
        return self.out_degree[i - 1]

    def degree(self, i: int) -> int:
        return self.in_degree[i - 1] + self.out_degree[i - 1]

    def out_interval(self, i: int) -> tuple[int, int]:
        """``(first, last)`` head index of arcs out of ``v_i``; empty when ``last < first``."""
        return i + 1, i + self.out_degree[i - 1]


def build_jaco(n: int) -> JacoGraph:
    if n < 1:
        raise JacoDomainError(f"Jaco graph order must be >= 1, got {n}")
    indeg, end = _reach_table(n)
    outdeg = [0] + [min(n, end[i]) - i for i in range(1, n + 1)]
    heads = np.repeat(np.arange(1, n + 1, dtype=np.int64), outdeg[1:])
    starts = np.repeat(np.cumsum([0] + outdeg[1:-1]), outdeg[1:]) if n > 1 else np.empty(0, np.int64)
    tails = heads + 1 + (np.arange(len(heads)) - starts)
    D = digraph_from_arcs(n, np.column_stack((heads, tails)))
    U = underlying(D)

    degrees = _degrees_at(n, indeg, end)
    delta = max(degrees[1:])
    jaconian = tuple(i for i in range(1, n + 1) if degrees[i] == delta)
    prime = jaconian[0]
    hope = tuple(range(prime + 1, n + 1))
    _assert_hope_complete(U, hope)
    return JacoGraph(
        n=n,
        digraph=D,
        in_degree=tuple(indeg[1:]),
        out_degree=tuple(outdeg[1:]),
        delta=delta,
        jaconian_set=jaconian,
        prime_jaconian=prime,
        hope_vertices=hope,
        underlying=U,
    )


def _assert_hope_complete(U: Graph, hope: VertexSet) -> None:
    if len(hope) < 2:
        return
    members = np.asarray(hope)
    for a in hope:
        inside = np.isin(U.neighbors(a), members).sum()
        if inside != len(hope) - 1:
            raise RuntimeError(
                f"Hope subgraph on {hope[0]}..{hope[-1]} is not complete at vertex {a}"
            )


def prime_jaconian_of(k: int) -> int:
    """Prime Jaconian vertex of J_k(1) from degree tables alone."""
    indeg, end = _reach_table(k)
    return _prime_jaconian(_degrees_at(k, indeg, end))


def h_direct(J: JacoGraph) -> int:
    """h(J*_n(1)) by triangle enumeration on the underlying graph."""
    return h(J.underlying)


def h_recursive(n: int) -> int:
    """h(J*_n(1)) grown from h(J*_4(1)) = 0 by the per-step Hope-triple count."""
    if n < 4:
        raise JacoDomainError(f"recursion starts at n = 4, got {n}")
    indeg, end = _reach_table(n)
    total = 0
    for k in range(4, n):
        i = _prime_jaconian(_degrees_at(k, indeg, end))
        s = k - i
        total += sum(s - j for j in range(1, s))
    return total


def _require_five(J: JacoGraph) -> None:
    if J.n < 5:
        raise JacoDomainError(f"formula is stated for n >= 5, got {J.n}")


def h_outdegree(J: JacoGraph) -> int:
    """Sum of ``d^+(v_j) - 1`` over vertices with out-degree at least 2.

    Agrees with :func:`h_direct` only for n = 5, 6; from n = 7 on it falls
    short (4 against 5). :func:`h_outdegree_pairs` is the identity that holds.
    """
    _require_five(J)
    return sum(d - 1 for d in J.out_degree if d >= 2)


def h_closed(J: JacoGraph) -> int:
    """``C(n - i, 3)`` plus ``d^+(v_j) - 1`` over ``j <= i`` with out-degree at least 2.

    Same caveat as :func:`h_outdegree`; see :func:`h_closed_pairs`.
    """
    _require_five(J)
    i = J.prime_jaconian
    return comb(J.n - i, 3) + sum(d - 1 for d in J.out_degree[:i] if d >= 2)


def h_outdegree_pairs(J: JacoGraph) -> int:
    """Sum of ``C(d^+(v_j), 2)``.

    Each out-neighbourhood is a clique, so every pair of out-neighbours of
    ``v_j`` closes exactly one triangle whose lowest vertex is ``v_j``.
    """
    return sum(comb(d, 2) for d in J.out_degree)


def h_closed_pairs(J: JacoGraph) -> int:
    """Triangles inside the Hope subgraph plus those whose lowest vertex is at or before the prime Jaconian vertex."""
    i = J.prime_jaconian
    return comb(J.n - i, 3) + sum(comb(d, 2) for d in J.out_degree[:i])


def metadata(J: JacoGraph) -> dict:
    def maybe(fn, *args):
        try:
            return fn(*args)
        except JacoDomainError:
            return None

    return {
        "n": J.n,
        "delta": J.delta,
        "jaconian_set": list(J.jaconian_set),
        "prime_jaconian": J.prime_jaconian,
        "hope_vertices": list(J.hope_vertices),
        "h_direct": h_direct(J),
        "h_recursive": maybe(h_recursive, J.n),
        "h_outdegree": maybe(h_outdegree, J),
        "h_closed": maybe(h_closed, J),
    }
