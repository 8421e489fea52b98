"""SU(4) in (k, m, n, l) coordinates.

``G^+ = G^-1`` with ``det G = 1`` becomes sixteen polynomial equations in the
parameters and their conjugates. This module evaluates them as residuals and
builds the explicit solution families: the 2-parameter groups ``G_1, G_2,
G_3``, the Abelian ``G0(alpha)`` and ``K_A`` factors, and the 4-parameter
group ``G0 x SU(2)`` with Gibbs-vector composition.
"""

from dataclasses import dataclass

import numpy as np

from .errors import Dirac4Error
from .params import ParamsKMNL, determinant, to_matrix, vec4
from .subgroups import CaseTag, reduce

TOL = 1e-10


def _mk(a, b):
    return a[0] * b[0] - a[1:] @ b[1:]


def _eu(a, b):
    return a[0] * b[0] + a[1:] @ b[1:]


@dataclass(frozen=True)
class UnitarityResidual:
    """LHS minus RHS of the sixteen unitarity equations."""

    r_k0: complex
    r_m0: complex
    r_l0: complex
    r_n0: complex
    r_k: np.ndarray
    r_m: np.ndarray
    r_l: np.ndarray
    r_n: np.ndarray

    def as_vector(self):
        return np.concatenate([[self.r_k0], self.r_k, [self.r_m0], self.r_m,
                               [self.r_n0], self.r_n, [self.r_l0], self.r_l])

    def magnitudes(self):
        """Per-equation magnitudes keyed ``k0, k1, ..., l3``."""
        names = [f"{c}{i}" for c in "kmnl" for i in range(4)]
        return dict(zip(names, np.abs(self.as_vector()).tolist()))

    def max_abs(self):
        return float(np.max(np.abs(self.as_vector())))


def _inverse_rhs(p, sign):
    """Right-hand sides for the conjugated parameters.

    ``sign=+1`` gives the SU(4) system. ``sign=-1`` negates the l*/n* lines,
    which is the SU(2,2) system.
    """
    k, m, n, l = p.k, p.m, p.n, p.l
    K, Kv = k[0], k[1:]
    M, Mv = m[0], m[1:]
    N, Nv = n[0], n[1:]
    L, Lv = l[0], l[1:]
    cr = np.cross
    rk0 = K * _mk(m, m) + M * _mk(l, n) + L * _mk(n, m) - N * _mk(l, m) + 1j * Lv @ cr(Mv, Nv)
    rm0 = M * _mk(k, k) + K * _mk(n, l) + N * _mk(l, k) - L * _mk(n, k) - 1j * Nv @ cr(Kv, Lv)
    rk = (-Kv * _mk(m, m) - Mv * _mk(l, n) - Lv * _mk(n, m) + Nv * _mk(l, m)
          + 2 * cr(Lv, cr(Nv, Mv)) + 1j * M * cr(Nv, Lv) + 1j * L * cr(Nv, Mv) + 1j * N * cr(Lv, Mv))
    rm = (-Mv * _mk(k, k) - Kv * _mk(n, l) - Nv * _mk(l, k) + Lv * _mk(n, k)
          + 2 * cr(Nv, cr(Lv, Kv)) - 1j * K * cr(Lv, Nv) - 1j * N * cr(Lv, Kv) - 1j * L * cr(Nv, Kv))
    rl0 = K * _mk(n, m) - M * _mk(k, n) + L * _mk(n, n) + N * _mk(k, m) + 1j * Kv @ cr(Nv, Mv)
    rn0 = M * _mk(l, k) - K * _mk(m, l) + N * _mk(l, l) + L * _mk(m, k) - 1j * Mv @ cr(Lv, Kv)
    rl = (-Kv * _mk(n, m) + Mv * _mk(k, n) - Lv * _mk(n, n) - Nv * _mk(k, m)
          + 2 * cr(Kv, cr(Mv, Nv)) + 1j * K * cr(Mv, Nv) + 1j * M * cr(Kv, Nv) + 1j * N * cr(Mv, Kv))
    rn = (-Mv * _mk(k, l) + Kv * _mk(m, l) - Nv * _mk(l, l) - Lv * _mk(m, k)
          + 2 * cr(Mv, cr(Kv, Lv)) - 1j * M * cr(Kv, Lv) - 1j * K * cr(Mv, Lv) - 1j * L * cr(Kv, Mv))
    return rk0, rm0, rl0 * sign, rn0 * sign, rk, rm, rl * sign, rn * sign


def _residual(p, sign):
    rk0, rm0, rl0, rn0, rk, rm, rl, rn = _inverse_rhs(p, sign)
    c = np.conj
    return UnitarityResidual(
        r_k0=complex(c(p.k[0]) - rk0), r_m0=complex(c(p.m[0]) - rm0),
        r_l0=complex(c(p.l[0]) - rl0), r_n0=complex(c(p.n[0]) - rn0),
        r_k=c(p.k[1:]) - rk, r_m=c(p.m[1:]) - rm,
        r_l=c(p.l[1:]) - rl, r_n=c(p.n[1:]) - rn,
    )


def unitarity_residual(p):
    """Residuals of the SU(4) conditions; all vanish iff ``G`` is in SU(4)
    (given ``det G = 1``, which the equations presuppose)."""
    return _residual(p, +1)


def is_special_unitary(p, tol=TOL):
    if unitarity_residual(p).max_abs() > tol:
        return False
    return abs(determinant(p) - 1) <= tol


def unitarity_defect(G):
    """``max |G^+ G - I|`` and ``|det G - 1|`` of a dense matrix."""
    G = np.asarray(G)
    return (float(np.max(np.abs(G.conj().T @ G - np.eye(4)))),
            float(abs(np.linalg.det(G) - 1)))


# --------------------------------------------------------------- sampling

def haar_su4(rng, size=None):
    """Haar-distributed SU(4) matrices.

    QR of a complex Gaussian with the phases of ``diag(R)`` moved into ``Q``
    gives Haar U(4); dividing by a fourth root of the determinant lands in
    SU(4).
    """
    n = 1 if size is None else size
    Z = (rng.standard_normal((n, 4, 4)) + 1j * rng.standard_normal((n, 4, 4))) / np.sqrt(2)
    Q, R = np.linalg.qr(Z)
    d = np.diagonal(R, axis1=1, axis2=2)
    Q = Q * (d / np.abs(d))[:, None, :]
    det = np.linalg.det(Q)
    Q = Q / (det ** 0.25)[:, None, None]
    return Q[0] if size is None else Q


def random_det1(rng, size=None):
    """Generic complex matrices rescaled to determinant one."""
    n = 1 if size is None else size
    Z = rng.standard_normal((n, 4, 4)) + 1j * rng.standard_normal((n, 4, 4))
    det = np.linalg.det(Z)
    Z = Z / (det ** 0.25)[:, None, None]
    return Z[0] if size is None else Z


# ------------------------------------------------------- explicit solutions

def _case_c(k0, kv, n0, nv):
    # Case-C embedding; complex data give the complexified families
    kv, nv = 1j * np.asarray(kv), 1j * np.asarray(nv)
    return ParamsKMNL(k=vec4(k0, kv), m=vec4(k0, -kv), n=vec4(n0, nv), l=vec4(n0, -nv))


def _axis_vec(axis, value):
    if axis not in (1, 2, 3):
        raise Dirac4Error("SHAPE", "axis must be 1, 2 or 3", {"axis": axis})
    v = np.zeros(3, dtype=complex)
    v[axis - 1] = value
    return v


def g0(alpha):
    """The Abelian subgroup ``k0 = cos alpha, n0 = sin alpha``."""
    return _case_c(np.cos(alpha), np.zeros(3), np.sin(alpha), np.zeros(3))


def k_axis(axis, rho):
    """``K_A``: block diagonal ``cos rho + i sin rho sigma_A`` twice."""
    return _case_c(np.cos(rho), _axis_vec(axis, np.sin(rho)), 0.0, np.zeros(3))


@dataclass(frozen=True)
class TwoParamSubgroup:
    axis: int
    k0: float
    kA: float
    n0: float
    nA: float

    def constraint_defects(self):
        return (self.kA * self.n0 + self.k0 * self.nA,
                self.k0 ** 2 + self.n0 ** 2 + self.kA ** 2 + self.nA ** 2 - 1)


def two_param_coords(axis, rho, alpha):
    ca, sa, cr, sr = np.cos(alpha), np.sin(alpha), np.cos(rho), np.sin(rho)
    return TwoParamSubgroup(axis, ca * cr, ca * sr, sa * cr, -sa * sr)


def build_two_param(axis, rho, alpha):
    """Element of ``G_axis`` at curvilinear coordinates ``(rho, alpha)``."""
    t = two_param_coords(axis, rho, alpha)
    return _case_c(t.k0, _axis_vec(axis, t.kA), t.n0, _axis_vec(axis, t.nA))


@dataclass(frozen=True)
class FourParamUnitary:
    """``G0 x SU(2)`` element: ``k = k0 W``, ``n = -n0 W`` with real data."""

    k0: float
    n0: float
    W: np.ndarray

    def __post_init__(self):
        W = np.array(self.W, dtype=float)
        W.setflags(write=False)
        object.__setattr__(self, "W", W)

    def normalization(self):
        return (self.k0 ** 2 + self.n0 ** 2) * (1 + self.W @ self.W)

    @classmethod
    def identity(cls):
        return cls(1.0, 0.0, np.zeros(3))

    @classmethod
    def from_g0_su2(cls, alpha, a0, a):
        """Product of ``G0(alpha)`` and ``diag(a0 + i a.sigma)`` twice."""
        a = np.asarray(a, dtype=float)
        return cls(np.cos(alpha) * a0, np.sin(alpha) * a0, a / a0)


def build_four_param(f, atol=1e-12):
    """Embed a four-parameter element.

    Raises
    ------
    Dirac4Error
        ``CONSTRAINT`` if ``(k0^2 + n0^2)(1 + W^2) != 1``.
    """
    d = f.normalization() - 1
    if abs(d) > atol:
        raise Dirac4Error("CONSTRAINT", "(k0^2 + n0^2)(1 + W^2) must equal 1", {"defect": d})
    return _case_c(f.k0, f.k0 * f.W, f.n0, -f.n0 * f.W)


def random_four_param(rng):
    """Admissible element from a random angle and a random SU(2) point."""
    alpha = rng.uniform(-np.pi, np.pi)
    q = rng.standard_normal(4)
    q /= np.linalg.norm(q)
    if q[0] < 0:
        q = -q
    return FourParamUnitary.from_g0_su2(alpha, q[0], q[1:])


def gibbs_compose(f1, f2):
    """Product ``f1 f2`` of four-parameter elements.

    Raises
    ------
    Dirac4Error
        ``POLE`` when ``1 - W'.W`` vanishes.
    """
    den = 1 - f1.W @ f2.W
    if abs(den) < 1e-12:
        raise Dirac4Error("POLE", "1 - W'.W vanishes", {"denominator": den})
    k0 = (f1.k0 * f2.k0 - f1.n0 * f2.n0) * den
    n0 = (f1.k0 * f2.n0 + f1.n0 * f2.k0) * den
    W = (f1.W + f2.W - np.cross(f1.W, f2.W)) / den
    return FourParamUnitary(k0, n0, W)


def is_involutive_minus_one(p, atol=1e-12):
    """Membership test for matrices with ``G^2 = -I``."""
    G = to_matrix(p)
    return bool(np.max(np.abs(G @ G + np.eye(4))) <= atol)


# --------------------------------------------------- eigenvalue reduction

@dataclass(frozen=True)
class EigenReport:
    """Two 2x2 symmetric eigenvalue systems obeyed by unitary Case-C elements.

    The scalar system acts on ``(k0, n0)`` with matrix ``[[A, C], [C, B]]``;
    the vector system acts on each ``(k_i, n_i)`` with ``[[Av, Cv], [Cv, -Av]]``.
    """

    A: float
    B: float
    C: float
    lambda1: float
    lambda2: float
    Av: float
    Cv: float
    lambda_v1: float
    lambda_v2: float
    scalar_residual: float
    vector_residual: float
    type: str
    eigen_one: bool


def eigen_reduce_caseC(p, atol=1e-12):
    """Assemble the eigenvalue systems of a Case-C element.

    ``type`` is ``"I"`` when ``k0^2 + n0^2 < 1``, ``"II"`` when it exceeds
    one, and ``"boundary"`` within ``atol``. ``eigen_one`` certifies that
    both systems have eigenvalue +1 on the element's own components.
    """
    r = reduce(p, CaseTag.C)
    k, n = np.real(r.k), np.real(r.n)
    k0, n0, kv, nv = k[0], n[0], k[1:], n[1:]
    s0 = k0 ** 2 + n0 ** 2
    d = kv @ kv - nv @ nv
    A, B, C = s0 + d, s0 - d, -2 * (kv @ nv)
    root = np.sqrt((A - B) ** 2 + 4 * C ** 2)
    lam1, lam2 = (A + B + root) / 2, (A + B - root) / 2
    Av = _eu(k, k) - _eu(n, n)
    Cv = -2 * _mk(n, k)
    lv = np.sqrt(Av ** 2 + Cv ** 2)
    M0 = np.array([[A, C], [C, B]])
    Mv = np.array([[Av, Cv], [Cv, -Av]])
    z0 = np.array([k0, n0])
    res0 = float(np.max(np.abs(M0 @ z0 - z0)))
    resv = max(float(np.max(np.abs(Mv @ np.array([kv[i], nv[i]]) - np.array([kv[i], nv[i]]))))
               for i in range(3))
    if abs(s0 - 1) <= atol:
        typ = "boundary"
    else:
        typ = "I" if s0 < 1 else "II"
    return EigenReport(A=float(A), B=float(B), C=float(C), lambda1=float(lam1), lambda2=float(lam2),
                       Av=float(Av), Cv=float(Cv), lambda_v1=float(lv), lambda_v2=float(-lv),
                       scalar_residual=res0, vector_residual=resv, type=typ,
                       eigen_one=bool(res0 <= 1e-10 and resv <= 1e-10))
