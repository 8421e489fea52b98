# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled loops for the closed-form (k, m, n, l) laws.

Same call signatures and results as :mod:`dirac4._pykernels`; inputs are
parameter stacks of shape ``(..., 4, 4)``.
"""

import numpy as np
cimport numpy as cnp

cnp.import_array()

BACKEND = "cython"

ctypedef double complex cplx

cdef cplx I = 1j


cdef inline cplx dot3(const cplx* a, const cplx* b) noexcept nogil:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


cdef inline void cross3(const cplx* a, const cplx* b, cplx* out) noexcept nogil:
    out[0] = a[1] * b[2] - a[2] * b[1]
    out[1] = a[2] * b[0] - a[0] * b[2]
    out[2] = a[0] * b[1] - a[1] * b[0]


cdef inline cplx mink(const cplx* a, const cplx* b) noexcept nogil:
    return a[0] * b[0] - dot3(a + 1, b + 1)


cdef inline cplx eucl(const cplx* a, const cplx* b) noexcept nogil:
    return a[0] * b[0] + dot3(a + 1, b + 1)


def _flat(P):
    P = np.ascontiguousarray(P, dtype=np.complex128)
    return P.reshape(-1, 4, 4), P.shape[:-2]


cdef void _compose_one(const cplx* p1, const cplx* p2, cplx* out) noexcept nogil:
    cdef const cplx* k1 = p1
    cdef const cplx* m1 = p1 + 4
    cdef const cplx* n1 = p1 + 8
    cdef const cplx* l1 = p1 + 12
    cdef const cplx* k = p2
    cdef const cplx* m = p2 + 4
    cdef const cplx* n = p2 + 8
    cdef const cplx* l = p2 + 12
    cdef cplx c1[3]
    cdef cplx c2[3]
    cdef int j
    out[0] = k1[0] * k[0] + dot3(k1 + 1, k + 1) - n1[0] * l[0] + dot3(n1 + 1, l + 1)
    cross3(k1 + 1, k + 1, c1)
    cross3(n1 + 1, l + 1, c2)
    for j in range(3):
        out[1 + j] = (k1[0] * k[1 + j] + k1[1 + j] * k[0] + I * c1[j]
                      - n1[0] * l[1 + j] + n1[1 + j] * l[0] + I * c2[j])
    out[4] = m1[0] * m[0] + dot3(m1 + 1, m + 1) - l1[0] * n[0] + dot3(l1 + 1, n + 1)
    cross3(m1 + 1, m + 1, c1)
    cross3(l1 + 1, n + 1, c2)
    for j in range(3):
        out[5 + j] = (m1[0] * m[1 + j] + m1[1 + j] * m[0] - I * c1[j]
                      - l1[0] * n[1 + j] + l1[1 + j] * n[0] - I * c2[j])
    out[8] = k1[0] * n[0] - dot3(k1 + 1, n + 1) + n1[0] * m[0] + dot3(n1 + 1, m + 1)
    cross3(k1 + 1, n + 1, c1)
    cross3(n1 + 1, m + 1, c2)
    for j in range(3):
        out[9 + j] = (k1[0] * n[1 + j] - k1[1 + j] * n[0] + I * c1[j]
                      + n1[0] * m[1 + j] + n1[1 + j] * m[0] - I * c2[j])
    out[12] = l1[0] * k[0] + dot3(l1 + 1, k + 1) + m1[0] * l[0] - dot3(m1 + 1, l + 1)
    cross3(l1 + 1, k + 1, c1)
    cross3(m1 + 1, l + 1, c2)
    for j in range(3):
        out[13 + j] = (l1[0] * k[1 + j] + l1[1 + j] * k[0] + I * c1[j]
                       + m1[0] * l[1 + j] - m1[1 + j] * l[0] - I * c2[j])


def compose(P1, P2):
    """Parameters of ``G(P1) @ G(P2)``; P1 is the left factor."""
    A, shape = _flat(P1)
    B, shape2 = _flat(P2)
    if A.shape[0] != B.shape[0]:
        A, B = np.broadcast_arrays(A, B)
        A, B = np.ascontiguousarray(A), np.ascontiguousarray(B)
        shape = np.broadcast_shapes(shape, shape2)
    cdef Py_ssize_t N = A.shape[0], i
    out = np.empty((N, 4, 4), dtype=np.complex128)
    cdef cplx[:, :, ::1] a = A
    cdef cplx[:, :, ::1] b = B
    cdef cplx[:, :, ::1] o = out
    with nogil:
        for i in range(N):
            _compose_one(&a[i, 0, 0], &b[i, 0, 0], &o[i, 0, 0])
    return out.reshape(tuple(shape) + (4, 4))


cdef void _adj_one(const cplx* p, cplx* out) noexcept nogil:
    cdef const cplx* k = p
    cdef const cplx* m = p + 4
    cdef const cplx* n = p + 8
    cdef const cplx* l = p + 12
    cdef const cplx* Kv = k + 1
    cdef const cplx* Mv = m + 1
    cdef const cplx* Nv = n + 1
    cdef const cplx* Lv = l + 1
    cdef cplx K = k[0], M = m[0], N = n[0], L = l[0]
    cdef cplx mm = mink(m, m), kk = mink(k, k), nn = mink(n, n), ll = mink(l, l)
    cdef cplx ln = mink(l, n), nm = mink(n, m), lm = mink(l, m)
    cdef cplx kn = mink(k, n), lk = mink(l, k), km = mink(k, m)
    cdef cplx t[3]
    cdef cplx dd[3]
    cdef cplx c1[3]
    cdef cplx c2[3]
    cdef cplx c3[3]
    cdef int j

    cross3(Mv, Nv, t)
    out[0] = K * mm + M * ln + L * nm - N * lm + I * dot3(Lv, t)
    cross3(Nv, Mv, t)
    cross3(Lv, t, dd)
    cross3(Nv, Lv, c1)
    cross3(Nv, Mv, c2)
    cross3(Lv, Mv, c3)
    for j in range(3):
        out[1 + j] = (-Kv[j] * mm - Mv[j] * ln - Lv[j] * nm + Nv[j] * lm
                      + 2 * dd[j] + I * M * c1[j] + I * L * c2[j] + I * N * c3[j])

    cross3(Lv, Kv, t)
    out[4] = K * ln + M * kk - L * kn + N * lk + I * dot3(Nv, t)
    cross3(Nv, t, dd)
    cross3(Kv, Lv, c1)
    cross3(Kv, Nv, c2)
    cross3(Nv, Lv, c3)
    for j in range(3):
        out[5 + j] = (-Kv[j] * ln - Mv[j] * kk + Lv[j] * kn - Nv[j] * lk
                      + 2 * dd[j] + I * N * c1[j] + I * L * c2[j] + I * K * c3[j])

    cross3(Mv, Nv, t)
    out[8] = -K * nm + M * kn - L * nn - N * km + I * dot3(Kv, t)
    cross3(Kv, t, dd)
    cross3(Mv, Nv, c1)
    cross3(Kv, Nv, c2)
    cross3(Mv, Kv, c3)
    for j in range(3):
        out[9 + j] = (-Kv[j] * nm + Mv[j] * kn - Lv[j] * nn - Nv[j] * km
                      + 2 * dd[j] + I * K * c1[j] + I * M * c2[j] + I * N * c3[j])

    cross3(Lv, Kv, t)
    out[12] = K * lm - M * lk - L * km - N * ll + I * dot3(Mv, t)
    cross3(Kv, Lv, t)
    cross3(Mv, t, dd)
    cross3(Lv, Kv, c1)
    cross3(Lv, Mv, c2)
    cross3(Mv, Kv, c3)
    for j in range(3):
        out[13 + j] = (Kv[j] * lm - Mv[j] * lk - Lv[j] * km - Nv[j] * ll
                       + 2 * dd[j] + I * M * c1[j] + I * K * c2[j] + I * L * c3[j])


def adjugate(P):
    """Cofactor parameters: ``inverse(P) = adjugate(P) / det(P)``."""
    A, shape = _flat(P)
    cdef Py_ssize_t N = A.shape[0], i
    out = np.empty((N, 4, 4), dtype=np.complex128)
    cdef cplx[:, :, ::1] a = A
    cdef cplx[:, :, ::1] o = out
    with nogil:
        for i in range(N):
            _adj_one(&a[i, 0, 0], &o[i, 0, 0])
    return out.reshape(tuple(shape) + (4, 4))


cdef cplx _det_expanded_one(const cplx* p) noexcept nogil:
    cdef const cplx* k = p
    cdef const cplx* m = p + 4
    cdef const cplx* n = p + 8
    cdef const cplx* l = p + 12
    cdef cplx t1[3]
    cdef cplx t2[3]
    cdef cplx t3[3]
    cdef cplx t4[3]
    cross3(m + 1, n + 1, t1)
    cross3(n + 1, l + 1, t2)
    cross3(n + 1, m + 1, t3)
    cross3(m + 1, k + 1, t4)
    return (mink(k, k) * mink(m, m) + mink(l, l) * mink(n, n)
            + 2 * mink(m, k) * mink(l, n) + 2 * mink(l, k) * mink(n, m)
            - 2 * mink(n, k) * mink(l, m)
            + 2 * I * (k[0] * dot3(l + 1, t1) + m[0] * dot3(k + 1, t2)
                       + l[0] * dot3(k + 1, t3) + n[0] * dot3(l + 1, t4))
            + 4 * dot3(k + 1, n + 1) * dot3(m + 1, l + 1)
            - 4 * dot3(k + 1, m + 1) * dot3(n + 1, l + 1))


cdef cplx _det_compact_one(const cplx* p) noexcept nogil:
    cdef const cplx* k = p
    cdef const cplx* m = p + 4
    cdef const cplx* n = p + 8
    cdef const cplx* l = p + 12
    cdef cplx c1[3]
    cdef cplx c2[3]
    cdef cplx u[3]
    cdef cplx w[3]
    cdef int j
    cross3(k + 1, n + 1, c1)
    cross3(m + 1, l + 1, c2)
    for j in range(3):
        u[j] = k[0] * n[1 + j] + n[0] * k[1 + j] - I * c1[j]
        w[j] = m[0] * l[1 + j] + l[0] * m[1 + j] + I * c2[j]
    return (mink(k, k) * mink(m, m) + mink(n, n) * mink(l, l)
            + 2 * eucl(k, n) * eucl(m, l) - 2 * dot3(u, w))


def det_expanded(P):
    """Determinant as a sum of invariant products of the four 4-vectors."""
    A, shape = _flat(P)
    cdef Py_ssize_t N = A.shape[0], i
    out = np.empty(N, dtype=np.complex128)
    cdef cplx[:, :, ::1] a = A
    cdef cplx[::1] o = out
    with nogil:
        for i in range(N):
            o[i] = _det_expanded_one(&a[i, 0, 0])
    return out.reshape(shape)


def det_compact(P):
    """Determinant in the shorter form built from two mixed 3-vectors."""
    A, shape = _flat(P)
    cdef Py_ssize_t N = A.shape[0], i
    out = np.empty(N, dtype=np.complex128)
    cdef cplx[:, :, ::1] a = A
    cdef cplx[::1] o = out
    with nogil:
        for i in range(N):
            o[i] = _det_compact_one(&a[i, 0, 0])
    return out.reshape(shape)


def to_matrix(P):
    """Dense ``(..., 4, 4)`` matrices from parameter stacks."""
    A, shape = _flat(P)
    cdef Py_ssize_t N = A.shape[0], i
    out = np.empty((N, 4, 4), dtype=np.complex128)
    cdef cplx[:, :, ::1] a = A
    cdef cplx[:, :, ::1] G = out
    with nogil:
        for i in range(N):
            G[i, 0, 0] = a[i, 0, 0] + a[i, 0, 3]
            G[i, 0, 1] = a[i, 0, 1] - I * a[i, 0, 2]
            G[i, 1, 0] = a[i, 0, 1] + I * a[i, 0, 2]
            G[i, 1, 1] = a[i, 0, 0] - a[i, 0, 3]
            G[i, 0, 2] = a[i, 2, 0] - a[i, 2, 3]
            G[i, 0, 3] = -(a[i, 2, 1] - I * a[i, 2, 2])
            G[i, 1, 2] = -(a[i, 2, 1] + I * a[i, 2, 2])
            G[i, 1, 3] = a[i, 2, 0] + a[i, 2, 3]
            G[i, 2, 0] = -(a[i, 3, 0] + a[i, 3, 3])
            G[i, 2, 1] = -(a[i, 3, 1] - I * a[i, 3, 2])
            G[i, 3, 0] = -(a[i, 3, 1] + I * a[i, 3, 2])
            G[i, 3, 1] = -(a[i, 3, 0] - a[i, 3, 3])
            G[i, 2, 2] = a[i, 1, 0] - a[i, 1, 3]
            G[i, 2, 3] = -(a[i, 1, 1] - I * a[i, 1, 2])
            G[i, 3, 2] = -(a[i, 1, 1] + I * a[i, 1, 2])
            G[i, 3, 3] = a[i, 1, 0] + a[i, 1, 3]
    return out.reshape(tuple(shape) + (4, 4))


def from_matrix(G):
    """Inverse of :func:`to_matrix` by half sums and differences of entries."""
    from . import _pykernels
    return _pykernels.from_matrix(G)
