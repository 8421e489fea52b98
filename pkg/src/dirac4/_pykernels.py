"""Vectorized numpy kernels for the closed-form (k, m, n, l) laws.

Parameter stacks have shape ``(..., 4, 4)``: axis -2 selects k, m, n, l and
axis -1 holds the (t, v1, v2, v3) components. This module is the reference
implementation; :mod:`dirac4._ckernels` mirrors it in compiled loops.
"""

import numpy as np

BACKEND = "python"


def _split(P):
    P = np.asarray(P, dtype=complex)
    return P[..., 0, :], P[..., 1, :], P[..., 2, :], P[..., 3, :]


def _dot(a, b):
    return np.einsum("...i,...i->...", a, b)


def _mink(a, b):
    """(ab) = a0 b0 - a.b over full 4-vectors."""
    return a[..., 0] * b[..., 0] - _dot(a[..., 1:], b[..., 1:])


def _eucl(a, b):
    """[ab] = a0 b0 + a.b over full 4-vectors."""
    return a[..., 0] * b[..., 0] + _dot(a[..., 1:], b[..., 1:])


def _s(x):
    return x[..., None]


def _stack(k, m, n, l):
    return np.stack([k, m, n, l], axis=-2)


def _join(t, v):
    return np.concatenate([t[..., None], v], axis=-1)


def compose(P1, P2):
    """Parameters of ``G(P1) @ G(P2)``; P1 is the left (primed) factor."""
    k1, m1, n1, l1 = _split(P1)
    k, m, n, l = _split(P2)
    cr = np.cross
    K1, M1, N1, L1 = k1[..., 1:], m1[..., 1:], n1[..., 1:], l1[..., 1:]
    K, M, N, L = k[..., 1:], m[..., 1:], n[..., 1:], l[..., 1:]
    t1 = {c: v[..., 0] for c, v in zip("kmnl", (k1, m1, n1, l1))}
    t = {c: v[..., 0] for c, v in zip("kmnl", (k, m, n, l))}

    k0 = t1["k"] * t["k"] + _dot(K1, K) - t1["n"] * t["l"] + _dot(N1, L)
    kv = (_s(t1["k"]) * K + K1 * _s(t["k"]) + 1j * cr(K1, K)
          - _s(t1["n"]) * L + N1 * _s(t["l"]) + 1j * cr(N1, L))
    m0 = t1["m"] * t["m"] + _dot(M1, M) - t1["l"] * t["n"] + _dot(L1, N)
    mv = (_s(t1["m"]) * M + M1 * _s(t["m"]) - 1j * cr(M1, M)
          - _s(t1["l"]) * N + L1 * _s(t["n"]) - 1j * cr(L1, N))
    n0 = t1["k"] * t["n"] - _dot(K1, N) + t1["n"] * t["m"] + _dot(N1, M)
    nv = (_s(t1["k"]) * N - K1 * _s(t["n"]) + 1j * cr(K1, N)
          + _s(t1["n"]) * M + N1 * _s(t["m"]) - 1j * cr(N1, M))
    l0 = t1["l"] * t["k"] + _dot(L1, K) + t1["m"] * t["l"] - _dot(M1, L)
    lv = (_s(t1["l"]) * K + L1 * _s(t["k"]) + 1j * cr(L1, K)
          + _s(t1["m"]) * L - M1 * _s(t["l"]) - 1j * cr(M1, L))
    return _stack(_join(k0, kv), _join(m0, mv), _join(n0, nv), _join(l0, lv))


def adjugate(P):
    """Cofactor parameters: ``inverse(P) = adjugate(P) / det(P)``."""
    k, m, n, l = _split(P)
    cr = np.cross
    K, M, N, L = k[..., 0], m[..., 0], n[..., 0], l[..., 0]
    Kv, Mv, Nv, Lv = k[..., 1:], m[..., 1:], n[..., 1:], l[..., 1:]
    mm, kk, nn, ll = _mink(m, m), _mink(k, k), _mink(n, n), _mink(l, l)
    ln, nm, lm = _mink(l, n), _mink(n, m), _mink(l, m)
    kn, lk, km = _mink(k, n), _mink(l, k), _mink(k, m)

    k0 = K * mm + M * ln + L * nm - N * lm + 1j * _dot(Lv, cr(Mv, Nv))
    kv = (-Kv * _s(mm) - Mv * _s(ln) - Lv * _s(nm) + Nv * _s(lm)
          + 2 * cr(Lv, cr(Nv, Mv)) + 1j * _s(M) * cr(Nv, Lv)
          + 1j * _s(L) * cr(Nv, Mv) + 1j * _s(N) * cr(Lv, Mv))
    m0 = K * ln + M * kk - L * kn + N * lk + 1j * _dot(Nv, cr(Lv, Kv))
    mv = (-Kv * _s(ln) - Mv * _s(kk) + Lv * _s(kn) - Nv * _s(lk)
          + 2 * cr(Nv, cr(Lv, Kv)) + 1j * _s(N) * cr(Kv, Lv)
          + 1j * _s(L) * cr(Kv, Nv) + 1j * _s(K) * cr(Nv, Lv))
    l0 = K * lm - M * lk - L * km - N * ll + 1j * _dot(Mv, cr(Lv, Kv))
    lv = (Kv * _s(lm) - Mv * _s(lk) - Lv * _s(km) - Nv * _s(ll)
          + 2 * cr(Mv, cr(Kv, Lv)) + 1j * _s(M) * cr(Lv, Kv)
          + 1j * _s(K) * cr(Lv, Mv) + 1j * _s(L) * cr(Mv, Kv))
    n0 = -K * nm + M * kn - L * nn - N * km + 1j * _dot(Kv, cr(Mv, Nv))
    nv = (-Kv * _s(nm) + Mv * _s(kn) - Lv * _s(nn) - Nv * _s(km)
          + 2 * cr(Kv, cr(Mv, Nv)) + 1j * _s(K) * cr(Mv, Nv)
          + 1j * _s(M) * cr(Kv, Nv) + 1j * _s(N) * cr(Mv, Kv))
    return _stack(_join(k0, kv), _join(m0, mv), _join(n0, nv), _join(l0, lv))


def det_expanded(P):
    """Determinant as a sum of invariant products of the four 4-vectors."""
    k, m, n, l = _split(P)
    cr = np.cross
    Kv, Mv, Nv, Lv = k[..., 1:], m[..., 1:], n[..., 1:], l[..., 1:]
    return (_mink(k, k) * _mink(m, m) + _mink(l, l) * _mink(n, n)
            + 2 * _mink(m, k) * _mink(l, n) + 2 * _mink(l, k) * _mink(n, m)
            - 2 * _mink(n, k) * _mink(l, m)
            + 2j * (k[..., 0] * _dot(Lv, cr(Mv, Nv)) + m[..., 0] * _dot(Kv, cr(Nv, Lv))
                    + l[..., 0] * _dot(Kv, cr(Nv, Mv)) + n[..., 0] * _dot(Lv, cr(Mv, Kv)))
            + 4 * _dot(Kv, Nv) * _dot(Mv, Lv) - 4 * _dot(Kv, Mv) * _dot(Nv, Lv))


def det_compact(P):
    """Determinant in the shorter form built from two mixed 3-vectors."""
    k, m, n, l = _split(P)
    cr = np.cross
    Kv, Mv, Nv, Lv = k[..., 1:], m[..., 1:], n[..., 1:], l[..., 1:]
    u = _s(k[..., 0]) * Nv + _s(n[..., 0]) * Kv - 1j * cr(Kv, Nv)
    w = _s(m[..., 0]) * Lv + _s(l[..., 0]) * Mv + 1j * cr(Mv, Lv)
    return (_mink(k, k) * _mink(m, m) + _mink(n, n) * _mink(l, l)
            + 2 * _eucl(k, n) * _eucl(m, l) - 2 * _dot(u, w))


def to_matrix(P):
    """Dense ``(..., 4, 4)`` matrices from parameter stacks."""
    k, m, n, l = _split(P)
    G = np.empty(k.shape[:-1] + (4, 4), dtype=complex)
    G[..., 0, 0] = k[..., 0] + k[..., 3]
    G[..., 0, 1] = k[..., 1] - 1j * k[..., 2]
    G[..., 1, 0] = k[..., 1] + 1j * k[..., 2]
    G[..., 1, 1] = k[..., 0] - k[..., 3]
    G[..., 0, 2] = n[..., 0] - n[..., 3]
    G[..., 0, 3] = -(n[..., 1] - 1j * n[..., 2])
    G[..., 1, 2] = -(n[..., 1] + 1j * n[..., 2])
    G[..., 1, 3] = n[..., 0] + n[..., 3]
    G[..., 2, 0] = -(l[..., 0] + l[..., 3])
    G[..., 2, 1] = -(l[..., 1] - 1j * l[..., 2])
    G[..., 3, 0] = -(l[..., 1] + 1j * l[..., 2])
    G[..., 3, 1] = -(l[..., 0] - l[..., 3])
    G[..., 2, 2] = m[..., 0] - m[..., 3]
    G[..., 2, 3] = -(m[..., 1] - 1j * m[..., 2])
    G[..., 3, 2] = -(m[..., 1] + 1j * m[..., 2])
    G[..., 3, 3] = m[..., 0] + m[..., 3]
    return G


def _pauli_coeffs(Bk):
    # B = b0 + b.sigma
    b0 = (Bk[..., 0, 0] + Bk[..., 1, 1]) / 2
    b1 = (Bk[..., 0, 1] + Bk[..., 1, 0]) / 2
    b2 = (Bk[..., 1, 0] - Bk[..., 0, 1]) / 2j
    b3 = (Bk[..., 0, 0] - Bk[..., 1, 1]) / 2
    return np.stack([b0, b1, b2, b3], axis=-1)


def from_matrix(G):
    """Inverse of :func:`to_matrix` by half sums and differences of entries."""
    G = np.asarray(G, dtype=complex)
    flip = np.array([1, -1, -1, -1])
    k = _pauli_coeffs(G[..., :2, :2])
    n = _pauli_coeffs(G[..., :2, 2:]) * flip
    l = -_pauli_coeffs(G[..., 2:, :2])
    m = _pauli_coeffs(G[..., 2:, 2:]) * flip
    return _stack(k, m, n, l)
