"""The (k, m, n, l) vector parametrization of 4x4 complex matrices.

A matrix is written in 2x2 blocks as

    G = [[k0 + k.sigma,    n0 - n.sigma],
         [-l0 - l.sigma,   m0 - m.sigma]]

with four complex 4-vectors k, m, n, l. Composition, inverse and determinant
are evaluated in closed form on these vectors; the batched kernels in
:mod:`dirac4.kernels` hold the formulas.
"""

from dataclasses import dataclass
from enum import Enum
import itertools

import numpy as np

from . import kernels
from .errors import Dirac4Error
from .matgen import METRIC, build_gamma_basis


def vec4(t, v=(0, 0, 0)):
    """Pack a 0-component and a 3-vector into a complex 4-vector."""
    out = np.empty(4, dtype=complex)
    out[0] = t
    out[1:] = v
    return out


def _ro(a):
    a = np.array(a, dtype=complex)
    if a.shape != (4,):
        raise Dirac4Error("SHAPE", "a 4-vector needs exactly 4 components", {"shape": list(a.shape)})
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class ParamsKMNL:
    """Four complex 4-vectors (t, v1, v2, v3) addressing one 4x4 matrix."""

    k: np.ndarray
    m: np.ndarray
    n: np.ndarray
    l: np.ndarray

    def __post_init__(self):
        for name in "kmnl":
            object.__setattr__(self, name, _ro(getattr(self, name)))

    @classmethod
    def identity(cls):
        return cls(k=vec4(1), m=vec4(1), n=vec4(0), l=vec4(0))

    @classmethod
    def zeros(cls):
        z = np.zeros(4)
        return cls(k=z, m=z, n=z, l=z)

    @classmethod
    def from_array(cls, P):
        P = np.asarray(P, dtype=complex)
        return cls(k=P[0], m=P[1], n=P[2], l=P[3])

    def as_array(self):
        """Stack as a (4, 4) array with rows k, m, n, l."""
        return np.stack([self.k, self.m, self.n, self.l])

    def to_json(self):
        return {c: [[z.real, z.imag] for z in getattr(self, c)] for c in "kmnl"}

    @classmethod
    def from_json(cls, obj):
        try:
            vals = {c: [complex(re, im) for re, im in obj[c]] for c in "kmnl"}
        except (KeyError, TypeError, ValueError) as exc:
            raise Dirac4Error("SHAPE", "parameters need k, m, n, l as four [re, im] pairs",
                              {"error": str(exc)}) from None
        return cls(**vals)

    def max_abs(self):
        return float(np.max(np.abs(self.as_array())))

    def allclose(self, other, atol):
        return bool(np.max(np.abs(self.as_array() - other.as_array())) <= atol)

    def replace(self, **kw):
        vals = {c: kw.get(c, getattr(self, c)) for c in "kmnl"}
        return ParamsKMNL(**vals)


@dataclass(frozen=True)
class DiracCoeffs:
    """Coefficients over the sixteen Dirac matrices.

    ``G = A I + i B gamma5 + i A_l gamma^l + B_l gamma^l gamma5
    + sum_{m,n} F_mn sigma^{mn}``, where the last sum runs over all ordered
    index pairs and ``F`` is antisymmetric.
    """

    A: complex
    B: complex
    Al: np.ndarray
    Bl: np.ndarray
    F: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "A", complex(self.A))
        object.__setattr__(self, "B", complex(self.B))
        for name in ("Al", "Bl"):
            object.__setattr__(self, name, _ro(getattr(self, name)))
        F = np.array(self.F, dtype=complex)
        if F.shape != (4, 4) or not np.array_equal(F, -F.T):
            raise Dirac4Error("SHAPE", "F must be an antisymmetric 4x4 array", {})
        F.setflags(write=False)
        object.__setattr__(self, "F", F)

    @classmethod
    def identity(cls):
        return cls(A=1, B=0, Al=np.zeros(4), Bl=np.zeros(4), F=np.zeros((4, 4)))

    def as_vector(self):
        iu = np.triu_indices(4, 1)
        return np.concatenate([[self.A, self.B], self.Al, self.Bl, self.F[iu]])


class Bilinear(Enum):
    MINKOWSKI = "minkowski"
    EUCLIDEAN = "euclidean"


def bilinear(a, b, kind=Bilinear.MINKOWSKI):
    """``(ab) = a0 b0 - a.b`` or ``[ab] = a0 b0 + a.b``, no conjugation."""
    a, b = np.asarray(a, dtype=complex), np.asarray(b, dtype=complex)
    s = np.dot(a[1:], b[1:])
    if Bilinear(kind) is Bilinear.MINKOWSKI:
        return complex(a[0] * b[0] - s)
    return complex(a[0] * b[0] + s)


def to_matrix(p, basis=None):
    """Dense 4x4 matrix of a parameter set.

    ``basis`` is accepted for symmetry with the Dirac-sum constructors; the
    layout is fixed by the Weyl block form and does not depend on it.
    """
    return kernels.to_matrix(p.as_array())


def from_matrix(G):
    """Read (k, m, n, l) back off a 4x4 matrix."""
    G = np.asarray(G, dtype=complex)
    if G.shape != (4, 4):
        raise Dirac4Error("SHAPE", "expected a 4x4 matrix", {"shape": list(G.shape)})
    return ParamsKMNL.from_array(kernels.from_matrix(G))


def dirac_sum_matrix(c, basis=None):
    """Evaluate the Dirac expansion of ``c`` as a dense matrix."""
    gb = basis or build_gamma_basis()
    g, g5 = gb.gamma, gb.gamma5
    G = c.A * np.eye(4) + 1j * c.B * g5
    for i in range(4):
        G = G + 1j * c.Al[i] * g[i] + c.Bl[i] * g[i] @ g5
    for a in range(4):
        for b in range(4):
            G = G + c.F[a, b] * gb.sigma[a][b]
    return G


def _F_from_ab(a, b):
    F = np.zeros((4, 4), dtype=complex)
    F[0, 1:] = a
    F[2, 3], F[3, 1], F[1, 2] = b
    return F - F.T


def from_dirac_coeffs(c):
    """Map Dirac coefficients to (k, m, n, l).

    ``k0 = A - iB``, ``m0 = A + iB``, ``l0 = B0 - iA0``, ``n0 = B0 + iA0`` and
    ``k = a - ib``, ``m = a + ib``, ``l = B - iA``, ``n = B + iA`` with
    ``a_j = F_0j`` and ``b = (F_23, F_31, F_12)``.
    """
    F = c.F
    a = F[0, 1:]
    b = np.array([F[2, 3], F[3, 1], F[1, 2]])
    return ParamsKMNL(
        k=vec4(c.A - 1j * c.B, a - 1j * b),
        m=vec4(c.A + 1j * c.B, a + 1j * b),
        n=c.Bl + 1j * c.Al,
        l=c.Bl - 1j * c.Al,
    )


def to_dirac_coeffs(p):
    """Inverse of :func:`from_dirac_coeffs`."""
    A = (p.k[0] + p.m[0]) / 2
    B = (p.m[0] - p.k[0]) / 2j
    a = (p.k[1:] + p.m[1:]) / 2
    b = (p.m[1:] - p.k[1:]) / 2j
    Bl = (p.n + p.l) / 2
    Al = (p.n - p.l) / 2j
    return DiracCoeffs(A=A, B=B, Al=Al, Bl=Bl, F=_F_from_ab(a, b))


def _levi_civita():
    eps = np.zeros((4, 4, 4, 4))
    for perm in itertools.permutations(range(4)):
        inv = sum(1 for i in range(4) for j in range(i + 1, 4) if perm[i] > perm[j])
        eps[perm] = -1.0 if inv % 2 else 1.0
    return eps


EPS_UPPER = _levi_civita()   # epsilon^{0123} = +1
EPS_UPPER.setflags(write=False)


def compose_dirac_coeffs(c1, c2):
    """Product law on Dirac coefficients; ``c1`` is the left factor.

    Indices are raised and lowered with ``diag(+1, -1, -1, -1)``. The
    coefficient arrays hold lower-index components.
    """
    g = METRIC
    E = EPS_UPPER
    up = lambda v: g @ v
    E_l = np.einsum("abcd,ae->ebcd", E, g)          # first index lowered
    E_last = np.einsum("abcd,de->abce", E, g)       # last index lowered
    E_mn = np.einsum("abcd,ce,df->abef", E, g, g)   # last two lowered

    A1, B1, Al1, Bl1, F1 = c1.A, c1.B, c1.Al, c1.Bl, c1.F
    A, B, Al, Bl, F = c2.A, c2.B, c2.Al, c2.Bl, c2.F
    F_up = g @ F @ g

    A2 = A1 * A - B1 * B - Al1 @ up(Al) - Bl1 @ up(Bl) - 0.5 * np.sum(F1 * F_up)
    B2 = (A1 * B + B1 * A + Al1 @ up(Bl) - Bl1 @ up(Al)
          + 0.25 * np.einsum("mn,cd,mncd", F1, F, E))
    Al2 = (A1 * Al - B1 * Bl + Al1 * A + Bl1 * B
           + np.einsum("k,kl->l", up(Al1), F) + np.einsum("lk,k->l", F1, up(Al))
           + 0.5 * np.einsum("k,mn,lkmn->l", Bl1, F, E_l)
           + 0.5 * np.einsum("mn,k,lmnk->l", F1, Bl, E_l))
    Bl2 = (A1 * Bl + B1 * Al - Al1 * B + Bl1 * A
           + np.einsum("k,kl->l", up(Bl1), F) + np.einsum("lk,k->l", F1, up(Bl))
           + 0.5 * np.einsum("k,mn,kmnl->l", Al1, F, E_last)
           + 0.5 * np.einsum("mn,k,mnkl->l", F1, Al, E_last))
    F2 = (A1 * F + F1 * A
          - (np.outer(Al1, Al) - np.outer(Al1, Al).T)
          - (np.outer(Bl1, Bl) - np.outer(Bl1, Bl).T)
          + np.einsum("l,k,lkmn->mn", Al1, Bl, E_mn)
          - np.einsum("l,k,lkmn->mn", Bl1, Al, E_mn)
          + 0.5 * B1 * np.einsum("kl,klmn->mn", F, E_mn)
          + 0.5 * B * np.einsum("kl,klmn->mn", F1, E_mn))
    mix = F1 @ g @ F
    F2 = F2 + (mix - mix.T)
    # exact antisymmetry; the two halves agree to rounding already
    F2 = (F2 - F2.T) / 2
    return DiracCoeffs(A=A2, B=B2, Al=Al2, Bl=Bl2, F=F2)


def compose(p1, p2):
    """Parameters of ``G(p1) @ G(p2)``; ``p1`` is the left factor."""
    return ParamsKMNL.from_array(kernels.compose(p1.as_array(), p2.as_array()))


def adjugate(p):
    """Cofactor parameters, so that ``G(adjugate(p)) = det(p) G(p)^-1``."""
    return ParamsKMNL.from_array(kernels.adjugate(p.as_array()))


def inverse(p, threshold=1e-12):
    """Parameters of the inverse matrix.

    Raises
    ------
    Dirac4Error
        ``SINGULAR`` when ``|det| < threshold``.
    """
    D = determinant(p)
    if abs(D) < threshold:
        raise Dirac4Error("SINGULAR", "determinant below threshold",
                          {"det": [D.real, D.imag], "threshold": threshold})
    return ParamsKMNL.from_array(kernels.adjugate(p.as_array()) / D)


def determinant_expanded(p):
    return complex(kernels.det_expanded(p.as_array()))


def determinant_compact(p):
    return complex(kernels.det_compact(p.as_array()))


def determinant(p, rtol=1e-12):
    """Determinant from the expanded invariant form, checked against the
    compact form.

    The mismatch is measured relative to ``max(|det|, s**4)`` with ``s`` the
    largest parameter magnitude, the natural size of the quartic terms.

    Raises
    ------
    Dirac4Error
        ``FORM_MISMATCH`` if the two forms disagree beyond ``rtol``.
    """
    e = determinant_expanded(p)
    c = determinant_compact(p)
    scale = max(abs(e), p.max_abs() ** 4, np.finfo(float).tiny)
    if abs(e - c) > rtol * scale:
        raise Dirac4Error("FORM_MISMATCH", "expanded and compact determinants disagree",
                          {"expanded": [e.real, e.imag], "compact": [c.real, c.imag]})
    return e


def random_params(rng, size=None):
    """Parameters with components uniform in the complex unit disc.

    Returns a ParamsKMNL, or a ``(size, 4, 4)`` stack when ``size`` is given.
    """
    shape = (4, 4) if size is None else (size, 4, 4)
    r = np.sqrt(rng.random(shape))
    z = r * np.exp(2j * np.pi * rng.random(shape))
    return ParamsKMNL.from_array(z) if size is None else z
