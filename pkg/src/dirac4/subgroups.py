"""Restricted families of the (k, m, n, l) parametrization.

Four subgroups are handled, tagged A to D:

* A: real 0-components and purely imaginary 3-vectors. The reduced form
  stores the real 3-vectors ``v`` with the embedded vector being ``i v``.
* B: ``m = k*`` and ``l = n*``; the reduced form carries k and n only.
* C: A together with ``m0 = k0, l0 = n0, m = -k, l = -n`` (reduced: k, n).
* D: block diagonal, ``n = l = 0``; with ``(kk) = (mm) = 1`` this is the
  spinor covering of SO(4, C).

A reduced parameter set is a :class:`ParamsKMNL` whose unused vectors are
zero. :func:`restrict` embeds it; :func:`reduce` goes back.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import Dirac4Error
from .matgen import I2, PAULI
from .params import ParamsKMNL, Bilinear, bilinear, vec4

SHAPE_ATOL = 1e-12
POLE_ATOL = 1e-12


class CaseTag(Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"


def _imag_vec(v):
    out = np.array(v, dtype=complex)
    out[1:] = 1j * out[1:]
    return out


def _real_vec(v):
    out = np.array(v, dtype=complex)
    out[1:] = -1j * out[1:]
    return out


def _shape_error(tag, what, **ctx):
    raise Dirac4Error("SHAPE", f"case {tag.value}: {what}", ctx)


def _require_zero(p, names, tag, atol):
    for c in names:
        if np.max(np.abs(getattr(p, c))) > atol:
            _shape_error(tag, f"{c} must be zero for the reduced form", vector=c)


def _require_real(p, names, tag, atol):
    for c in names:
        if np.max(np.abs(np.imag(getattr(p, c)))) > atol:
            _shape_error(tag, f"{c} must be real", vector=c)


def restrict(p, tag, atol=SHAPE_ATOL):
    """Embed reduced case parameters into the full parametrization.

    Raises
    ------
    Dirac4Error
        ``SHAPE`` if ``p`` carries components that the case does not allow.
    """
    tag = CaseTag(tag)
    if tag is CaseTag.A:
        _require_real(p, "kmnl", tag, atol)
        return ParamsKMNL(*(_imag_vec(np.real(getattr(p, c))) for c in "kmnl"))
    if tag is CaseTag.B:
        _require_zero(p, "ml", tag, atol)
        return ParamsKMNL(k=p.k, m=np.conj(p.k), n=p.n, l=np.conj(p.n))
    if tag is CaseTag.C:
        _require_zero(p, "ml", tag, atol)
        _require_real(p, "kn", tag, atol)
        k, n = _imag_vec(np.real(p.k)), _imag_vec(np.real(p.n))
        return ParamsKMNL(k=k, m=_bar(k), n=n, l=_bar(n))
    _require_zero(p, "nl", tag, atol)
    return p


def _bar(v):
    # (v0, v) -> (v0, -v)
    out = np.array(v, dtype=complex)
    out[1:] = -out[1:]
    return out


def _close(a, b, atol):
    return bool(np.max(np.abs(np.asarray(a) - np.asarray(b))) <= atol)


def case_violation(p, tag, atol=SHAPE_ATOL):
    """Name of the first case condition that embedded ``p`` breaks, or None."""
    tag = CaseTag(tag)
    if tag in (CaseTag.A, CaseTag.C):
        for c in "kmnl":
            v = getattr(p, c)
            if abs(v[0].imag) > atol:
                return f"{c}0 real"
            if np.max(np.abs(v[1:].real)) > atol:
                return f"{c} imaginary"
        if tag is CaseTag.C:
            if not _close(p.m, _bar(p.k), atol):
                return "m = (k0, -k)"
            if not _close(p.l, _bar(p.n), atol):
                return "l = (n0, -n)"
        return None
    if tag is CaseTag.B:
        if not _close(p.m, np.conj(p.k), atol):
            return "m = k*"
        if not _close(p.l, np.conj(p.n), atol):
            return "l = n*"
        return None
    if not _close(p.n, 0, atol):
        return "n = 0"
    if not _close(p.l, 0, atol):
        return "l = 0"
    return None


def is_in_case(p, tag, atol=SHAPE_ATOL):
    return case_violation(p, tag, atol) is None


def reduce(p, tag, atol=SHAPE_ATOL):
    """Inverse of :func:`restrict` on embedded parameters."""
    tag = CaseTag(tag)
    bad = case_violation(p, tag, atol)
    if bad is not None:
        _shape_error(tag, f"condition {bad} violated", condition=bad)
    z = np.zeros(4)
    if tag is CaseTag.A:
        return ParamsKMNL(*(np.real(_real_vec(getattr(p, c))) for c in "kmnl"))
    if tag is CaseTag.B:
        return ParamsKMNL(k=p.k, m=z, n=p.n, l=z)
    if tag is CaseTag.C:
        return ParamsKMNL(k=np.real(_real_vec(p.k)), m=z, n=np.real(_real_vec(p.n)), l=z)
    return p


def _parts(v):
    return v[0], v[1:]


def _law_a(p1, p2):
    # all reduced components real
    K_, Kv_ = _parts(p1.k); M_, Mv_ = _parts(p1.m); N_, Nv_ = _parts(p1.n); L_, Lv_ = _parts(p1.l)
    K, Kv = _parts(p2.k); M, Mv = _parts(p2.m); N, Nv = _parts(p2.n); L, Lv = _parts(p2.l)
    cr = np.cross
    return ParamsKMNL(
        k=vec4(K_ * K - Kv_ @ Kv - N_ * L - Nv_ @ Lv,
               K_ * Kv + Kv_ * K - cr(Kv_, Kv) - N_ * Lv + Nv_ * L - cr(Nv_, Lv)),
        m=vec4(M_ * M - Mv_ @ Mv - L_ * N - Lv_ @ Nv,
               M_ * Mv + Mv_ * M + cr(Mv_, Mv) - L_ * Nv + Lv_ * N + cr(Lv_, Nv)),
        n=vec4(K_ * N + Kv_ @ Nv + N_ * M - Nv_ @ Mv,
               K_ * Nv - Kv_ * N - cr(Kv_, Nv) + N_ * Mv + Nv_ * M + cr(Nv_, Mv)),
        l=vec4(L_ * K - Lv_ @ Kv + M_ * L + Mv_ @ Lv,
               L_ * Kv + Lv_ * K - cr(Lv_, Kv) + M_ * Lv - Mv_ * L + cr(Mv_, Lv)),
    )


def _law_b(p1, p2):
    K_, Kv_ = _parts(p1.k); N_, Nv_ = _parts(p1.n)
    K, Kv = _parts(p2.k); N, Nv = _parts(p2.n)
    c, cr = np.conj, np.cross
    z = np.zeros(4)
    return ParamsKMNL(
        k=vec4(K_ * K + Kv_ @ Kv - N_ * c(N) + Nv_ @ c(Nv),
               K_ * Kv + Kv_ * K + 1j * cr(Kv_, Kv) - N_ * c(Nv) + Nv_ * c(N) + 1j * cr(Nv_, c(Nv))),
        m=z,
        n=vec4(K_ * N - Kv_ @ Nv + N_ * c(K) + Nv_ @ c(Kv),
               K_ * Nv - Kv_ * N + 1j * cr(Kv_, Nv) + N_ * c(Kv) + Nv_ * c(K) - 1j * cr(Nv_, c(Kv))),
        l=z,
    )


def _law_c(p1, p2):
    K_, Kv_ = _parts(p1.k); N_, Nv_ = _parts(p1.n)
    K, Kv = _parts(p2.k); N, Nv = _parts(p2.n)
    cr = np.cross
    z = np.zeros(4)
    return ParamsKMNL(
        k=vec4(K_ * K - Kv_ @ Kv - N_ * N + Nv_ @ Nv,
               K_ * Kv + Kv_ * K - cr(Kv_, Kv) + N_ * Nv + Nv_ * N + cr(Nv_, Nv)),
        m=z,
        n=vec4(K_ * N + Kv_ @ Nv + N_ * K + Nv_ @ Kv,
               K_ * Nv - Kv_ * N - cr(Kv_, Nv) - N_ * Kv + Nv_ * K - cr(Nv_, Kv)),
        l=z,
    )


def _law_d(p1, p2):
    K_, Kv_ = _parts(p1.k); M_, Mv_ = _parts(p1.m)
    K, Kv = _parts(p2.k); M, Mv = _parts(p2.m)
    cr = np.cross
    z = np.zeros(4)
    return ParamsKMNL(
        k=vec4(K_ * K + Kv_ @ Kv, K_ * Kv + Kv_ * K + 1j * cr(Kv_, Kv)),
        m=vec4(M_ * M + Mv_ @ Mv, M_ * Mv + Mv_ * M - 1j * cr(Mv_, Mv)),
        n=z, l=z,
    )


_LAWS = {CaseTag.A: _law_a, CaseTag.B: _law_b, CaseTag.C: _law_c, CaseTag.D: _law_d}


def compose_reduced(tag, r1, r2):
    """Case-specialized product on reduced parameters."""
    return _LAWS[CaseTag(tag)](r1, r2)


def compose_case(tag, p1, p2, atol=SHAPE_ATOL):
    """Product of two embedded case elements via the specialized law."""
    tag = CaseTag(tag)
    r = compose_reduced(tag, reduce(p1, tag, atol), reduce(p2, tag, atol))
    return restrict(r, tag)


def _eu(a, b):
    return bilinear(a, b, Bilinear.EUCLIDEAN)


def _mk(a, b):
    return bilinear(a, b, Bilinear.MINKOWSKI)


def _det_compact_reduced(tag, r):
    cr = np.cross
    if tag is CaseTag.A:
        k, m, n, l = r.k, r.m, r.n, r.l
        u = k[0] * n[1:] + n[0] * k[1:] + cr(k[1:], n[1:])
        w = m[0] * l[1:] + l[0] * m[1:] - cr(m[1:], l[1:])
        return _eu(k, k) * _eu(m, m) + _eu(n, n) * _eu(l, l) + 2 * _mk(k, n) * _mk(m, l) + 2 * (u @ w)
    if tag is CaseTag.B:
        k, n = r.k, r.n
        ks, ns = np.conj(k), np.conj(n)
        u = k[0] * n[1:] + n[0] * k[1:] - 1j * cr(k[1:], n[1:])
        w = ks[0] * ns[1:] + ns[0] * ks[1:] + 1j * cr(ks[1:], ns[1:])
        return (_mk(k, k) * _mk(ks, ks) + _mk(n, n) * _mk(ns, ns)
                + 2 * _eu(k, n) * _eu(ks, ns) - 2 * (u @ w))
    if tag is CaseTag.C:
        k, n = r.k, r.n
        u = k[0] * n[1:] + n[0] * k[1:] + cr(k[1:], n[1:])
        return _eu(k, k) ** 2 + _eu(n, n) ** 2 + 2 * _mk(k, n) ** 2 - 2 * (u @ u)
    return _mk(r.k, r.k) * _mk(r.m, r.m)


def _det_expanded_reduced(tag, r):
    cr = np.cross
    if tag is CaseTag.A:
        k, m, n, l = r.k, r.m, r.n, r.l
        K, M, N, L = k[1:], m[1:], n[1:], l[1:]
        return (_eu(k, k) * _eu(m, m) + _eu(l, l) * _eu(n, n) + 2 * _eu(m, k) * _eu(l, n)
                + 2 * _eu(l, k) * _eu(n, m) - 2 * _eu(n, k) * _eu(l, m)
                + 2 * (k[0] * L @ cr(M, N) + m[0] * K @ cr(N, L)
                       + l[0] * K @ cr(N, M) + n[0] * L @ cr(M, K))
                + 4 * (K @ N) * (M @ L) - 4 * (K @ M) * (N @ L))
    if tag is CaseTag.B:
        k, n = r.k, r.n
        ks, ns = np.conj(k), np.conj(n)
        K, N, Ks, Ns = k[1:], n[1:], ks[1:], ns[1:]
        # the n0 and n0* triple products enter with the signs the matrix
        # determinant demands
        return (_mk(k, k) * _mk(ks, ks) + _mk(ns, ns) * _mk(n, n) + 2 * _mk(ks, k) * _mk(ns, n)
                + 2 * _mk(ns, k) * _mk(n, ks) - 2 * _mk(n, k) * _mk(ns, ks)
                + 2j * (k[0] * Ks @ cr(N, Ns) - ks[0] * K @ cr(Ns, N)
                        - ns[0] * N @ cr(K, Ks) + n[0] * Ns @ cr(Ks, K))
                + 4 * (K @ N) * (Ks @ Ns) - 4 * (K @ Ks) * (N @ Ns))
    if tag is CaseTag.C:
        k, n = r.k, r.n
        K, N = k[1:], n[1:]
        return (_eu(k, k) ** 2 + _eu(n, n) ** 2 + 2 * _mk(k, k) * _mk(n, n)
                + 2 * _mk(n, k) ** 2 - 2 * _eu(n, k) ** 2
                + 4 * (K @ N) ** 2 - 4 * (K @ K) * (N @ N))
    return _mk(r.k, r.k) * _mk(r.m, r.m)


def case_determinant(tag, p, form="compact", atol=SHAPE_ATOL):
    """Determinant of an embedded case element from the case formula.

    ``form`` selects the short case formula (``"compact"``) or the case
    specialization of the full invariant expansion (``"expanded"``).
    """
    tag = CaseTag(tag)
    r = reduce(p, tag, atol)
    if form == "compact":
        return complex(_det_compact_reduced(tag, r))
    if form == "expanded":
        return complex(_det_expanded_reduced(tag, r))
    raise ValueError(f"unknown determinant form {form!r}")


# ---------------------------------------------------------------- Case D tools

def project(p, sector="k"):
    """3-vector ``Q = k / k0`` (or ``m / m0`` for the m-sector)."""
    v = p.k if sector == "k" else p.m
    if abs(v[0]) < POLE_ATOL:
        raise Dirac4Error("POLE", "0-component vanishes; projection undefined", {"sector": sector})
    return v[1:] / v[0]


def fedorov_compose(Q1, Q2, sign=+1):
    """Compose 3-vector parameters; ``Q1`` is the left factor.

    ``sign=+1`` gives the k-sector rule, ``sign=-1`` the m-sector rule.
    """
    Q1 = np.asarray(Q1, dtype=complex)
    Q2 = np.asarray(Q2, dtype=complex)
    den = 1 + Q1 @ Q2
    if abs(den) < POLE_ATOL:
        raise Dirac4Error("POLE", "1 + Q'.Q vanishes", {"denominator": [den.real, den.imag]})
    return (Q2 + Q1 + 1j * sign * np.cross(Q1, Q2)) / den


@dataclass(frozen=True)
class CylindricalCoords:
    rho: complex
    z: complex
    phi: complex
    Rho: complex
    Z: complex
    Phi: complex


@dataclass(frozen=True)
class EulerAngles:
    """Complex Euler angles of the two spinor blocks.

    ``k_shift`` and ``m_shift`` record that the principal square roots
    returned the negated block, compensated by adding ``2 pi`` to ``alpha``
    (respectively ``Alpha``).
    """

    alpha: complex
    beta: complex
    gamma: complex
    Alpha: complex
    Beta: complex
    Gamma: complex
    k_shift: bool = False
    m_shift: bool = False


def _cyl_vec(r, z, f):
    return np.array([np.cos(r) * np.cos(z), 1j * np.sin(r) * np.cos(f),
                     1j * np.sin(r) * np.sin(f), 1j * np.cos(r) * np.sin(z)])


def from_cylindrical(c):
    """Case-D parameters with ``(kk) = (mm) = 1`` from cylindrical coordinates."""
    return ParamsKMNL(k=_cyl_vec(c.rho, c.z, c.phi), m=_cyl_vec(c.Rho, c.Z, c.Phi),
                      n=np.zeros(4), l=np.zeros(4))


def cylindrical_from_euler(e):
    return CylindricalCoords(rho=e.beta / 2, z=(e.alpha - e.gamma) / 2, phi=(e.alpha + e.gamma) / 2,
                             Rho=e.Beta / 2, Z=(e.Alpha - e.Gamma) / 2, Phi=(e.Alpha + e.Gamma) / 2)


def euler_from_cylindrical(c):
    return EulerAngles(alpha=c.phi + c.z, beta=2 * c.rho, gamma=c.phi - c.z,
                       Alpha=c.Phi + c.Z, Beta=2 * c.Rho, Gamma=c.Phi - c.Z)


def _angle(cos_v, sin_v):
    return complex(-1j * np.log(cos_v + 1j * sin_v))


def _sector_angles(v, atol):
    s1 = v[0] ** 2 - v[3] ** 2
    s2 = -v[1] ** 2 - v[2] ** 2
    if abs(s1) < atol or abs(s2) < atol:
        raise Dirac4Error("CHART_BOUNDARY", "square-root argument vanishes",
                          {"k0^2-k3^2": [s1.real, s1.imag], "-k1^2-k2^2": [s2.real, s2.imag]})
    r1, r2 = np.sqrt(s1 + 0j), np.sqrt(s2 + 0j)
    den = r1 * r2
    cb, sb = s1 - s2, 2 * den
    ca = (-1j * v[0] * v[1] + v[2] * v[3]) / den
    sa = (-1j * v[0] * v[2] - v[1] * v[3]) / den
    cg = (-1j * v[0] * v[1] - v[2] * v[3]) / den
    sg = (-1j * v[0] * v[2] + v[1] * v[3]) / den
    a, b, g = _angle(ca, sa), _angle(cb, sb), _angle(cg, sg)
    shift = not np.allclose(_cyl_vec(b / 2, (a - g) / 2, (a + g) / 2), v, rtol=0, atol=1e-8)
    if shift:
        a += 2 * np.pi
    return a, b, g, shift


def to_euler(p, atol=1e-12):
    """Euler angles of a Case-D element with ``(kk) = (mm) = 1``.

    Both sectors use the same cos/sin expressions, since the cylindrical
    chart has the same form for k and m.

    Raises
    ------
    Dirac4Error
        ``SHAPE`` outside Case D, ``CHART_BOUNDARY`` where the chart degenerates.
    """
    bad = case_violation(p, CaseTag.D)
    if bad is not None:
        _shape_error(CaseTag.D, f"condition {bad} violated", condition=bad)
    a, b, g, ks = _sector_angles(p.k, atol)
    A, B, G, ms = _sector_angles(p.m, atol)
    return EulerAngles(a, b, g, A, B, G, ks, ms)


def _exp_pauli(j, t):
    # exp(i t sigma_j); sigma_j squares to I
    return np.cos(t) * I2 + 1j * np.sin(t) * PAULI[j]


def euler_blocks(e):
    """The two 2x2 diagonal blocks of a Case-D element as Euler products.

    ``k0 + k.sigma = exp(-i s3 gamma/2) exp(i s1 beta/2) exp(i s3 alpha/2)``
    and ``m0 - m.sigma = exp(-i s3 A/2) exp(-i s1 B/2) exp(i s3 Gamma/2)``.
    """
    kb = _exp_pauli(2, -e.gamma / 2) @ _exp_pauli(0, e.beta / 2) @ _exp_pauli(2, e.alpha / 2)
    mb = _exp_pauli(2, -e.Alpha / 2) @ _exp_pauli(0, -e.Beta / 2) @ _exp_pauli(2, e.Gamma / 2)
    return kb, mb


def from_euler(e):
    return from_cylindrical(cylindrical_from_euler(e))


# ----------------------------------------------------------- reality classes

def is_real_lorentz(p, atol=SHAPE_ATOL):
    """Spinor covering of O(3,1): Case D with ``m = k*``."""
    return is_in_case(p, CaseTag.D, atol) and _close(p.m, np.conj(p.k), atol)


def is_real_o4(p, atol=SHAPE_ATOL):
    """Spinor covering of O(4): Case D with real ``k0, m0`` and imaginary 3-vectors."""
    if not is_in_case(p, CaseTag.D, atol):
        return False
    return all(abs(v[0].imag) <= atol and np.max(np.abs(v[1:].real)) <= atol for v in (p.k, p.m))


def is_real_o22(p, atol=SHAPE_ATOL):
    """Spinor covering of O(2,2): Case D with ``(v0, v1, v2, -i v3)`` real."""
    if not is_in_case(p, CaseTag.D, atol):
        return False
    return all(np.max(np.abs(v[:3].imag)) <= atol and abs(v[3].real) <= atol for v in (p.k, p.m))
