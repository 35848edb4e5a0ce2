# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for triangle enumeration and girth.

Mirrors :mod:`holescope._pykernels`; selected at import when available.
"""

import numpy as np
cimport numpy as cnp

ctypedef cnp.int64_t i64

cnp.import_array()


cdef _oriented(Py_ssize_t n, const i64[::1] indptr, const i64[::1] indices,
               const i64[::1] rank):
    """CSR of arcs pointing from lower to higher rank."""
    cdef Py_ssize_t u, k, pos
    cdef i64 w
    optr_arr = np.zeros(n + 2, dtype=np.int64)
    cdef i64[::1] optr = optr_arr
    for u in range(1, n + 1):
        for k in range(indptr[u], indptr[u + 1]):
            if rank[indices[k]] > rank[u]:
                optr[u + 1] += 1
    for u in range(1, n + 2):
        optr[u] += optr[u - 1]
    oind_arr = np.empty(optr[n + 1], dtype=np.int64)
    cdef i64[::1] oind = oind_arr
    for u in range(1, n + 1):
        pos = optr[u]
        for k in range(indptr[u], indptr[u + 1]):
            w = indices[k]
            if rank[w] > rank[u]:
                oind[pos] = w
                pos += 1
    return optr_arr, oind_arr


cdef i64 _scan(Py_ssize_t n, const i64[::1] optr, const i64[::1] oind,
               i64[::1] mark, i64[:, ::1] out) nogil:
    """Count triangles; write them to ``out`` when it has rows."""
    cdef Py_ssize_t u, a, b
    cdef i64 v, w, found = 0
    cdef bint store = out.shape[0] > 0
    for u in range(1, n + 1):
        if optr[u + 1] - optr[u] < 2:
            continue
        for a in range(optr[u], optr[u + 1]):
            mark[oind[a]] = u
        for a in range(optr[u], optr[u + 1]):
            v = oind[a]
            for b in range(optr[v], optr[v + 1]):
                w = oind[b]
                if mark[w] == u:
                    if store:
                        out[found, 0] = u
                        out[found, 1] = v
                        out[found, 2] = w
                    found += 1
    return found


def forward_count(Py_ssize_t n, indptr, indices, rank):
    optr, oind = _oriented(n, indptr, indices, rank)
    mark = np.zeros(n + 1, dtype=np.int64)
    cdef i64[:, ::1] none = np.empty((0, 3), dtype=np.int64)
    cdef i64[::1] optr_v = optr, oind_v = oind, mark_v = mark
    cdef i64 total
    with nogil:
        total = _scan(n, optr_v, oind_v, mark_v, none)
    return int(total)


def forward_triangles(Py_ssize_t n, indptr, indices, rank):
    optr, oind = _oriented(n, indptr, indices, rank)
    mark = np.zeros(n + 1, dtype=np.int64)
    cdef i64[:, ::1] none = np.empty((0, 3), dtype=np.int64)
    cdef i64[::1] optr_v = optr, oind_v = oind, mark_v = mark
    cdef i64 total
    with nogil:
        total = _scan(n, optr_v, oind_v, mark_v, none)
    out = np.empty((total, 3), dtype=np.int64)
    cdef i64[:, ::1] out_v = out
    mark_v[:] = 0
    if total:
        with nogil:
            _scan(n, optr_v, oind_v, mark_v, out_v)
    return out


def bfs_girth(Py_ssize_t n, indptr, indices, comp, Py_ssize_t ncomp):
    cdef const i64[::1] ptr = indptr
    cdef const i64[::1] ind = indices
    cdef const i64[::1] cid = comp
    best_arr = np.zeros(ncomp, dtype=np.int64)
    dist_arr = np.full(n + 1, -1, dtype=np.int64)
    parent_arr = np.zeros(n + 1, dtype=np.int64)
    queue_arr = np.empty(n + 1, dtype=np.int64)
    cdef i64[::1] best = best_arr, dist = dist_arr, parent = parent_arr, queue = queue_arr
    cdef Py_ssize_t s, head, tail, k, c
    cdef i64 u, w, du, length
    with nogil:
        for s in range(1, n + 1):
            c = cid[s]
            dist[s] = 0
            parent[s] = 0
            queue[0] = s
            head = 0
            tail = 1
            while head < tail:
                u = queue[head]
                du = dist[u]
                if best[c] and 2 * du + 1 >= best[c]:
                    break
                head += 1
                for k in range(ptr[u], ptr[u + 1]):
                    w = ind[k]
                    if dist[w] < 0:
                        dist[w] = du + 1
                        parent[w] = u
                        queue[tail] = w
                        tail += 1
                    elif parent[u] != w:
                        length = du + dist[w] + 1
                        if best[c] == 0 or length < best[c]:
                            best[c] = length
            for k in range(tail):
                dist[queue[k]] = -1
    return best_arr
