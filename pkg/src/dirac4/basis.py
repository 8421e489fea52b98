"""Gell-Mann coordinates and the GL(3,C) / SL(3,C) corner.

The expansion of a 4x4 matrix over ``I`` and the Gell-Mann matrices is
written with the primed diagonal triple ``lambda3, lambda8', lambda15'``
(``lambda8' = diag(0,-1,1,0)``, ``lambda15' = diag(0,-1,0,1)``); unprimed
diagonal coefficients are produced on request.
"""

from dataclasses import dataclass, fields
from enum import Enum
from fractions import Fraction

import numpy as np

from . import reference_forms as ref
from .errors import Dirac4Error
from .matgen import I4, build_gamma_basis, build_gellmann_basis
from .params import ParamsKMNL, vec4

SQ3, SQ6 = np.sqrt(3.0), np.sqrt(6.0)


def symbol_matrices():
    """Matrices behind the short symbols used in the combination tables."""
    gb, lam = build_gamma_basis(), build_gellmann_basis()
    g, g5, s = gb.gamma, gb.gamma5, gb.sigma
    out = {
        "I": I4,
        "g0": g[0], "g5": g5,
        "g5g1": g5 @ g[1], "g5g2": g5 @ g[2], "g5g3": g5 @ g[3],
        "ig1": 1j * g[1], "ig2": 1j * g[2], "ig3": 1j * g[3],
        "ig5g0": 1j * g5 @ g[0],
        "2s01": 2 * s[0][1], "2s02": 2 * s[0][2], "2s03": 2 * s[0][3],
        "2is12": 2j * s[1][2], "2is23": 2j * s[2][3], "2is31": 2j * s[3][1],
        "l8p": lam.lambda8p, "l15p": lam.lambda15p,
    }
    for i in range(1, 16):
        out[f"l{i}"] = lam[i]
    return out


def _evaluate(terms, table):
    return sum(c * table[name] for c, name in terms)


def _describe(terms):
    return " + ".join(f"{c}*{name}" for c, name in terms)


def lambda_from_dirac_combos():
    """Check every tabulated Dirac/Gell-Mann linear identity.

    Two-term Dirac combinations, their explicit diagonal matrices and the
    inverse relations are compared with exact equality. The unprimed
    diagonal identities carry irrational weights and are compared to
    ``1e-15``.

    Returns
    -------
    list of dict
        One record per identity with ``lhs``, ``rhs`` and ``kind``.

    Raises
    ------
    Dirac4Error
        ``IDENTITY_FAIL`` naming the first identity that does not hold.
    """
    table = symbol_matrices()
    records = []

    def side(x):
        if isinstance(x, np.ndarray):
            return x, "matrix"
        return _evaluate(x, table), _describe(x)

    def check(lhs, rhs, kind, exact=True):
        (L, ltxt), (R, rtxt) = side(lhs), side(rhs)
        ok = np.array_equal(L, R) if exact else np.max(np.abs(L - R)) <= 1e-15
        rec = {"lhs": ltxt, "rhs": rtxt, "kind": kind}
        if not ok:
            raise Dirac4Error("IDENTITY_FAIL", f"{ltxt} != {rtxt}", rec)
        records.append(rec)

    for lhs, rhs in ref.COMBINATIONS:
        check(lhs, rhs, "combination")
    for lhs, text in ref.DIAGONAL_COMBINATION_MATRICES:
        check(lhs, ref.parse_matrix(text), "diagonal matrix")
    for lhs, rhs in ref.INVERSE_COMBINATIONS:
        check(lhs, rhs, "inverse")
    for name, rhs in ref.DIAGONAL_THROUGH_DIRAC.items():
        check([(1, name)], rhs, "unprimed diagonal", exact=False)
    return records


class Direction(Enum):
    TO_PRIMED = "to_primed"
    FROM_PRIMED = "from_primed"


def primed_diagonal_convert(direction, coords):
    """Re-express diagonal coefficients between the two diagonal triples.

    ``TO_PRIMED`` maps coefficients of ``(lambda3, lambda8, lambda15)`` to
    coefficients of ``(lambda3, lambda8', lambda15')``; ``FROM_PRIMED`` is
    the inverse.
    """
    x3, x8, x15 = coords
    if Direction(direction) is Direction.TO_PRIMED:
        # lambda8 = a/sqrt3 - 2b/sqrt3, lambda15 = (a + b - 3C)/sqrt6
        return (x3 + x8 / SQ3 + x15 / SQ6, -2 * x8 / SQ3 + x15 / SQ6, -3 * x15 / SQ6)
    # lambda8' = lambda3/2 - (sqrt3/2) lambda8
    # lambda15' = -(sqrt6/3) lambda15 + lambda3/2 - lambda8/(2 sqrt3)
    return (x3 + x8 / 2 + x15 / 2, -SQ3 / 2 * x8 - x15 / (2 * SQ3), -SQ6 / 3 * x15)


@dataclass(frozen=True)
class GellMannCoords:
    """Coefficients over ``I``, the off-diagonal Gell-Mann matrices and the
    primed diagonal triple (``c3d``, ``c8d``, ``c15d``)."""

    c0: complex
    c1: complex
    c2: complex
    c4: complex
    c5: complex
    c6: complex
    c7: complex
    c9: complex
    c10: complex
    c11: complex
    c12: complex
    c13: complex
    c14: complex
    c3d: complex
    c8d: complex
    c15d: complex

    def as_dict(self):
        return {f.name: complex(getattr(self, f.name)) for f in fields(self)}

    def unprimed_diagonal(self):
        """Coefficients ``(c3, c8, c15)`` of ``lambda3, lambda8, lambda15``."""
        # invert TO_PRIMED
        y3, y8, y15 = self.c3d, self.c8d, self.c15d
        x15 = -SQ6 / 3 * y15
        x8 = -SQ3 / 2 * (y8 - x15 / SQ6)
        x3 = y3 - x8 / SQ3 - x15 / SQ6
        return x3, x8, x15


_OFFDIAG = (1, 2, 4, 5, 6, 7, 9, 10, 11, 12, 13, 14)


def to_gellmann_coords(p):
    """Gell-Mann coefficients of ``G(k, m, n, l)`` from closed formulas."""
    k, m, n, l = p.k, p.m, p.n, p.l
    return GellMannCoords(
        c0=(k[0] + m[0]) / 2,
        c1=k[1], c2=k[2],
        c4=((n[0] - n[3]) - (l[0] + l[3])) / 2,
        c5=(-(n[0] - n[3]) - (l[0] + l[3])) / 2j,
        c6=(-(n[1] + 1j * n[2]) - (l[1] - 1j * l[2])) / 2,
        c7=((n[1] + 1j * n[2]) - (l[1] - 1j * l[2])) / 2j,
        c9=(-(n[1] - 1j * n[2]) - (l[1] + 1j * l[2])) / 2,
        c10=((n[1] - 1j * n[2]) - (l[1] + 1j * l[2])) / 2j,
        c11=((n[0] + n[3]) - (l[0] - l[3])) / 2,
        c12=(-(n[0] + n[3]) - (l[0] - l[3])) / 2j,
        c13=-m[1], c14=-m[2],
        c3d=k[3] + (k[0] - m[0]) / 2,
        c8d=-m[3] + (m[0] - k[0]) / 2,
        c15d=m[3] + (m[0] - k[0]) / 2,
    )


def gellmann_matrix(c):
    """Reassemble the matrix ``c0 I + sum c_i lambda_i``."""
    lam = build_gellmann_basis()
    G = c.c0 * I4 + c.c3d * lam[3] + c.c8d * lam.lambda8p + c.c15d * lam.lambda15p
    for i in _OFFDIAG:
        G = G + getattr(c, f"c{i}") * lam[i]
    return G


def gellmann_coords_from_matrix(G):
    """Trace projections onto the same basis, for arbitrary dense input."""
    G = np.asarray(G, dtype=complex)
    lam = build_gellmann_basis()
    vals = {f"c{i}": complex(np.trace(lam[i] @ G) / 2) for i in _OFFDIAG}
    d = np.diag(G)
    # d = c0 (1,1,1,1) + c3 (1,-1,0,0) + c8' (0,-1,1,0) + c15' (0,-1,0,1)
    c0 = np.sum(d) / 4
    c3, c8, c15 = d[0] - c0, d[2] - c0, d[3] - c0
    return GellMannCoords(c0=c0, c3d=c3, c8d=c8, c15d=c15, **vals)


def diagonal_block_resolution():
    """Exact rational check that inside the 3x3 block
    ``lambda15' = -I/3 + lambda3/3 + lambda8'/3``.

    Returns the residual as a tuple of Fractions (all zero when it holds).
    """
    third = Fraction(1, 3)
    I3 = (1, 1, 1)
    l3 = (1, -1, 0)
    l8p = (0, -1, 1)
    l15p = (0, -1, 0)
    return tuple(l15p[i] - (-third * I3[i] + third * l3[i] + third * l8p[i]) for i in range(3))


# ------------------------------------------------------------ GL(3) corner

_GL3_CONDITIONS = (
    ("i n2 = n1", lambda p: 1j * p.n[2] - p.n[1]),
    ("n3 = -n0", lambda p: p.n[3] + p.n[0]),
    ("i l2 = -l1", lambda p: 1j * p.l[2] + p.l[1]),
    ("l3 = l0", lambda p: p.l[3] - p.l[0]),
    ("m1 = 0", lambda p: p.m[1]),
    ("m2 = 0", lambda p: p.m[2]),
)


@dataclass(frozen=True)
class Sl3Params:
    """Reduced parameters of the 3x3 corner plus the (4,4) entry.

    The embedded matrix is
    ``[[k0+k3, k1-ik2, 2n0, 0], [k1+ik2, k0-k3, -2n1, 0],
    [-2l0, -2l1, M, 0], [0, 0, 0, corner]]``.
    """

    k0: complex
    k: np.ndarray
    n0: complex
    n1: complex
    l0: complex
    l1: complex
    M: complex
    corner: complex = 1.0

    def __post_init__(self):
        k = np.array(self.k, dtype=complex)
        k.setflags(write=False)
        object.__setattr__(self, "k", k)

    @classmethod
    def identity(cls):
        return cls(1, np.zeros(3), 0, 0, 0, 0, 1, 1)

    def matrix(self):
        k0, (k1, k2, k3) = self.k0, self.k
        return np.array([
            [k0 + k3, k1 - 1j * k2, 2 * self.n0, 0],
            [k1 + 1j * k2, k0 - k3, -2 * self.n1, 0],
            [-2 * self.l0, -2 * self.l1, self.M, 0],
            [0, 0, 0, self.corner],
        ], dtype=complex)

    def block3(self):
        return self.matrix()[:3, :3]

    def as_vector(self):
        return np.concatenate([[self.k0], self.k, [self.n0, self.n1, self.l0, self.l1, self.M, self.corner]])


def restrict_to_gl3(p, atol=1e-12):
    """Reduced GL(3) parameters of an admissible ``p``.

    Raises
    ------
    Dirac4Error
        ``SHAPE`` naming the first violated condition.
    """
    for name, f in _GL3_CONDITIONS:
        v = f(p)
        if abs(v) > atol:
            raise Dirac4Error("SHAPE", f"GL(3) condition {name} violated",
                              {"condition": name, "defect": [v.real, v.imag]})
    return Sl3Params(k0=p.k[0], k=p.k[1:], n0=p.n[0], n1=p.n[1], l0=p.l[0], l1=p.l[1],
                     M=p.m[0] - p.m[3], corner=p.m[0] + p.m[3])


def embed(s):
    """Full (k, m, n, l) parameters of a reduced GL(3) element."""
    return ParamsKMNL(
        k=vec4(s.k0, s.k),
        m=vec4((s.M + s.corner) / 2, (0, 0, (s.corner - s.M) / 2)),
        n=vec4(s.n0, (s.n1, -1j * s.n1, -s.n0)),
        l=vec4(s.l0, (s.l1, 1j * s.l1, s.l0)),
    )


def compose_sl3(s1, s2):
    """Product ``s1 s2`` of reduced corner elements; ``s1`` is the left factor."""
    k0_, k_ = s1.k0, s1.k
    k0, k = s2.k0, s2.k
    n0_, n1_, l0_, l1_, M_ = s1.n0, s1.n1, s1.l0, s1.l1, s1.M
    n0, n1, l0, l1, M = s2.n0, s2.n1, s2.l0, s2.l1, s2.M
    base = k0_ * k + k_ * k0 + 1j * np.cross(k_, k)
    kk = base + 2 * np.array([-n0_ * l1 + n1_ * l0,
                              -1j * n0_ * l1 - 1j * n1_ * l0,
                              -n0_ * l0 - n1_ * l1])
    return Sl3Params(
        k0=k0_ * k0 + k_ @ k + 2 * (-n0_ * l0 + n1_ * l1),
        k=kk,
        n0=(k0_ + k_[2]) * n0 - (k_[0] - 1j * k_[1]) * n1 + n0_ * M,
        n1=(k0_ - k_[2]) * n1 - (k_[0] + 1j * k_[1]) * n0 + n1_ * M,
        l0=l0_ * (k0 + k[2]) + l1_ * (k[0] + 1j * k[1]) + M_ * l0,
        l1=l0_ * (k[0] - 1j * k[1]) + l1_ * (k0 - k[2]) + M_ * l1,
        M=M_ * M - 4 * (l0_ * n0 - l1_ * n1),
        corner=s1.corner * s2.corner,
    )


def random_sl3(rng, corner=1.0):
    """Reduced parameters with components in the complex unit disc."""
    z = np.sqrt(rng.random(10)) * np.exp(2j * np.pi * rng.random(10))
    return Sl3Params(z[0], z[1:4], z[4], z[5], z[6], z[7], z[8], corner)
