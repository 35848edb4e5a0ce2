"""Pure-Python kernels; same signatures as the compiled ``_kernels`` module.

All functions take the padded CSR arrays of :class:`holescope.graph.Graph`
(``indptr`` of length ``n + 2``, neighbour ids in ``1..n``).
"""

from collections import deque

import numpy as np


def _oriented(n, indptr, indices, rank):
    ind = indices.tolist()
    ptr = indptr.tolist()
    rk = rank.tolist()
    out = [()] * (n + 1)
    for u in range(1, n + 1):
        ru = rk[u]
        out[u] = [w for w in ind[ptr[u] : ptr[u + 1]] if rk[w] > ru]
    return out


def forward_triangles(n, indptr, indices, rank):
    """Triangles as an ``(k, 3)`` array; each found once from its lowest-rank vertex."""
    out = _oriented(n, indptr, indices, rank)
    found = []
    for u in range(1, n + 1):
        ou = out[u]
        if len(ou) < 2:
            continue
        su = set(ou)
        for v in ou:
            for w in su.intersection(out[v]):
                found.append((u, v, w))
    if not found:
        return np.empty((0, 3), dtype=np.int64)
    return np.array(found, dtype=np.int64)


def forward_count(n, indptr, indices, rank):
    out = _oriented(n, indptr, indices, rank)
    total = 0
    for u in range(1, n + 1):
        ou = out[u]
        if len(ou) < 2:
            continue
        su = set(ou)
        for v in ou:
            total += len(su.intersection(out[v]))
    return total


def bfs_girth(n, indptr, indices, comp, ncomp):
    """Shortest cycle length per component id (0 when the component is acyclic)."""
    ind = indices.tolist()
    ptr = indptr.tolist()
    comp = comp.tolist()
    best = [0] * ncomp
    dist = [-1] * (n + 1)
    parent = [0] * (n + 1)
    for s in range(1, n + 1):
        c = comp[s]
        visited = [s]
        dist[s] = 0
        parent[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = dist[u]
            if best[c] and 2 * du + 1 >= best[c]:
                break
            for w in ind[ptr[u] : ptr[u + 1]]:
                if dist[w] < 0:
                    dist[w] = du + 1
                    parent[w] = u
                    visited.append(w)
                    queue.append(w)
                elif parent[u] != w:
                    length = du + dist[w] + 1
                    if not best[c] or length < best[c]:
                        best[c] = length
        for w in visited:
            dist[w] = -1
    return np.array(best, dtype=np.int64)
