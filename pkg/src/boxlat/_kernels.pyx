# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``_kernels_py`` for the reference semantics."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef inline int _find(int[::1] parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef void _principal(const int[:, ::1] meet, const int[:, ::1] join,
                     int a, int b, int[::1] parent, int[::1] stack) noexcept nogil:
    cdef int n = meet.shape[0]
    cdef int top = 0, x, y, rx, ry, z, u, v
    for x in range(n):
        parent[x] = x
    stack[0] = a
    stack[1] = b
    top = 2
    while top > 0:
        top -= 2
        x = stack[top]
        y = stack[top + 1]
        rx = _find(parent, x)
        ry = _find(parent, y)
        if rx == ry:
            continue
        if rx < ry:
            parent[ry] = rx
        else:
            parent[rx] = ry
        for z in range(n):
            u = join[x, z]
            v = join[y, z]
            if u != v:
                stack[top] = u
                stack[top + 1] = v
                top += 2
            u = meet[x, z]
            v = meet[y, z]
            if u != v:
                stack[top] = u
                stack[top + 1] = v
                top += 2
    for x in range(n):
        parent[x] = _find(parent, x)


def principal_congruence(meet, join, int a, int b):
    cdef const int[:, ::1] m = np.ascontiguousarray(meet, dtype=np.int32)
    cdef const int[:, ::1] j = np.ascontiguousarray(join, dtype=np.int32)
    cdef int n = m.shape[0]
    parent = np.empty(n, dtype=np.int32)
    # each successful union pushes at most 2n pairs; at most n-1 unions
    stack = np.empty(4 * n * n + 4, dtype=np.int32)
    _principal(m, j, a, b, parent, stack)
    return parent.tolist()


def principal_congruences(meet, join, pairs):
    cdef const int[:, ::1] m = np.ascontiguousarray(meet, dtype=np.int32)
    cdef const int[:, ::1] j = np.ascontiguousarray(join, dtype=np.int32)
    cdef int n = m.shape[0]
    cdef Py_ssize_t k, count = len(pairs)
    out = np.empty((count, n), dtype=np.int32)
    cdef int[:, ::1] o = out
    stack = np.empty(4 * n * n + 4, dtype=np.int32)
    cdef int[::1] s = stack
    cdef int[::1] ab = np.asarray(pairs, dtype=np.int32).reshape(-1) if count else np.empty(0, dtype=np.int32)
    for k in range(count):
        _principal(m, j, ab[2 * k], ab[2 * k + 1], o[k], s)
    return out.tolist()


def close_bi_ideal(colmax, leq_a, join_a, leq_b, join_b, int zero_b, int one_a):
    cdef const unsigned char[:, ::1] la = np.ascontiguousarray(leq_a, dtype=np.uint8)
    cdef const unsigned char[:, ::1] lb = np.ascontiguousarray(leq_b, dtype=np.uint8)
    cdef const int[:, ::1] ja_t = np.ascontiguousarray(join_a, dtype=np.int32)
    cdef const int[:, ::1] jb_t = np.ascontiguousarray(join_b, dtype=np.int32)
    out = np.array(colmax, dtype=np.int32)
    cdef int[::1] ja = out
    cdef int na = la.shape[0], nb = lb.shape[0]
    cdef int x, y, y2, jb
    cdef bint changed = True
    ja[zero_b] = one_a
    with nogil:
        while changed:
            changed = False
            for x in range(na):
                jb = -1
                for y in range(nb):
                    if la[x, ja[y]]:
                        jb = y if jb < 0 else jb_t[jb, y]
                for y in range(nb):
                    if lb[y, jb] and not la[x, ja[y]]:
                        ja[y] = ja_t[ja[y], x]
                        changed = True
            for y in range(nb):
                for y2 in range(nb):
                    if lb[y2, y] and not la[ja[y], ja[y2]]:
                        ja[y2] = ja_t[ja[y2], ja[y]]
                        changed = True
    return out.tolist()
