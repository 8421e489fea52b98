"""Dirac coordinates, the sixteen-coordinate group law, elementary
exponentials and the five-factor exponential form of SU(4).

A matrix is written over ``I`` and the fifteen generators as

    G = gamma I + a.alpha + b.beta + X.A + Y.B + Z.C

where ``A_i = alpha_i beta_1``, ``B_i = alpha_i beta_2``, ``C_i = alpha_i
beta_3``. In the composition routines the first argument is the left factor
(primed quantities) and the second the right one.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import Dirac4Error
from .matgen import GENERATOR_NAMES, GENERATOR_TOKENS, I4, build_dirac_generators, derive_mult_table

# cyclic (k, l, n) index triples, zero based, with eps_{kln} = +1
_CYCLIC = ((0, 1, 2), (1, 2, 0), (2, 0, 1))


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _cross(u, v):
    return np.array([u[1] * v[2] - u[2] * v[1],
                     u[2] * v[0] - u[0] * v[2],
                     u[0] * v[1] - u[1] * v[0]])


@dataclass(frozen=True)
class DiracCoords:
    """Sixteen complex coordinates over ``I, alpha, beta, A, B, C``."""

    gamma: complex
    a: np.ndarray
    b: np.ndarray
    X: np.ndarray
    Y: np.ndarray
    Z: np.ndarray

    def __post_init__(self):
        for name in ("a", "b", "X", "Y", "Z"):
            v = np.array(getattr(self, name), dtype=complex)
            if v.shape != (3,):
                raise Dirac4Error("SHAPE", f"{name} must have 3 components", {"shape": list(v.shape)})
            v.setflags(write=False)
            object.__setattr__(self, name, v)
        object.__setattr__(self, "gamma", complex(self.gamma))

    @property
    def C(self):
        """``(X, Y, Z)`` as the list ``C^(1), C^(2), C^(3)``."""
        return (self.X, self.Y, self.Z)

    @classmethod
    def identity(cls):
        z = np.zeros(3)
        return cls(1.0, z, z, z, z, z)

    def as_vector(self):
        """Coordinates in generator order, ``gamma`` first."""
        return np.concatenate([[self.gamma], self.a, self.b, self.X, self.Y, self.Z])

    @classmethod
    def from_vector(cls, v):
        v = np.asarray(v, dtype=complex)
        if v.shape != (16,):
            raise Dirac4Error("SHAPE", "expected 16 coordinates", {"shape": list(v.shape)})
        return cls(v[0], v[1:4], v[4:7], v[7:10], v[10:13], v[13:16])


def dirac_coords(G):
    """Trace projections ``x = tr(Lambda G) / 4`` onto the sixteen elements."""
    G = np.asarray(G, dtype=complex)
    gens = build_dirac_generators().generators
    v = [np.trace(G) / 4] + [np.trace(L @ G) / 4 for L in gens]
    return DiracCoords.from_vector(v)


def coords_matrix(d):
    """Reassemble ``gamma I + sum x_i Lambda_i``."""
    gens = build_dirac_generators().generators
    v = d.as_vector()
    G = v[0] * I4
    for c, L in zip(v[1:], gens):
        G = G + c * L
    return G


def compose_dirac_coords(d1, d2):
    """Coordinates of ``G(d1) G(d2)`` in the cyclic index form.

    ``C^(j)`` stands for ``X, Y, Z`` with ``j = 1, 2, 3``. The two
    ``C^(l) x C^(n)`` terms of the ``C`` lines enter with a minus sign.
    """
    g1, a1, b1, C1 = d1.gamma, d1.a, d1.b, d1.C
    g2, a2, b2, C2 = d2.gamma, d2.a, d2.b, d2.C

    gamma = g1 * g2 + _dot(a1, a2) + _dot(b1, b2) + sum(_dot(C1[j], C2[j]) for j in range(3))

    a = g1 * a2 + g2 * a1 + 1j * _cross(a1, a2)
    for j in range(3):
        a = a + b1[j] * C2[j] + b2[j] * C1[j] + 1j * _cross(C1[j], C2[j])

    b = g1 * b2 + g2 * b1 + 1j * _cross(b1, b2)
    b = b + np.array([_dot(a1, C2[k]) + _dot(a2, C1[k]) for k in range(3)])
    for k, l, n in _CYCLIC:
        b[k] += 1j * (_dot(C1[l], C2[n]) - _dot(C1[n], C2[l]))

    C = []
    for j, l, n in _CYCLIC:
        c = g1 * C2[j] + g2 * C1[j] + a1 * b2[j] + a2 * b1[j]
        c = c + 1j * (C1[l] * b2[n] - C2[l] * b1[n]) - 1j * (C1[n] * b2[l] - C2[n] * b1[l])
        c = c + 1j * (_cross(a1, C2[j]) - _cross(a2, C1[j]))
        c = c - (_cross(C1[l], C2[n]) + _cross(C2[l], C1[n]))
        C.append(c)
    return DiracCoords(gamma, a, b, *C)


def compose_dirac_coords_long(d1, d2):
    """The same law written out as sixteen explicit component lines."""
    g_, a_, b_, X_, Y_, Z_ = d1.gamma, d1.a, d1.b, d1.X, d1.Y, d1.Z
    g, a, b, X, Y, Z = d2.gamma, d2.a, d2.b, d2.X, d2.Y, d2.Z
    a1_, a2_, a3_ = a_
    b1_, b2_, b3_ = b_
    X1_, X2_, X3_ = X_
    Y1_, Y2_, Y3_ = Y_
    Z1_, Z2_, Z3_ = Z_
    a1, a2, a3 = a
    b1, b2, b3 = b
    X1, X2, X3 = X
    Y1, Y2, Y3 = Y
    Z1, Z2, Z3 = Z
    i = 1j

    gamma = (g_ * g + (a1_ * a1 + a2_ * a2 + a3_ * a3) + (b1_ * b1 + b2_ * b2 + b3_ * b3)
             + (X1_ * X1 + X2_ * X2 + X3_ * X3) + (Y1_ * Y1 + Y2_ * Y2 + Y3_ * Y3)
             + (Z1_ * Z1 + Z2_ * Z2 + Z3_ * Z3))

    A1 = ((g_ * a1 + a1_ * g) + (b1_ * X1 + b2_ * Y1 + b3_ * Z1) + (X1_ * b1 + Y1_ * b2 + Z1_ * b3)
          + i * (a2_ * a3 - a3_ * a2) + i * (X2_ * X3 - X3_ * X2) + i * (Y2_ * Y3 - Y3_ * Y2)
          + i * (Z2_ * Z3 - Z3_ * Z2))
    A2 = ((g_ * a2 + a2_ * g) + (b1_ * X2 + b2_ * Y2 + b3_ * Z2) + (X2_ * b1 + Y2_ * b2 + Z2_ * b3)
          + i * (a3_ * a1 - a1_ * a3) + i * (X3_ * X1 - X1_ * X3) + i * (Y3_ * Y1 - Y1_ * Y3)
          + i * (Z3_ * Z1 - Z1_ * Z3))
    A3 = ((g_ * a3 + a3_ * g) + (b1_ * X3 + b2_ * Y3 + b3_ * Z3) + (X3_ * b1 + Y3_ * b2 + Z3_ * b3)
          + i * (a1_ * a2 - a2_ * a1) + i * (X1_ * X2 - X2_ * X1) + i * (Y1_ * Y2 - Y2_ * Y1)
          + i * (Z1_ * Z2 - Z2_ * Z1))

    B1 = (g_ * b1 + b1_ * g + i * (b2_ * b3 - b3_ * b2) + (a1_ * X1 + a2_ * X2 + a3_ * X3)
          + (X1_ * a1 + X2_ * a2 + X3_ * a3) + i * (Y1_ * Z1 + Y2_ * Z2 + Y3_ * Z3)
          - i * (Z1_ * Y1 + Z2_ * Y2 + Z3_ * Y3))
    B2 = (g_ * b2 + b2_ * g + i * (b3_ * b1 - b1_ * b3) + (a1_ * Y1 + a2_ * Y2 + a3_ * Y3)
          + (Y1_ * a1 + Y2_ * a2 + Y3_ * a3) + i * (Z1_ * X1 + Z2_ * X2 + Z3_ * X3)
          - i * (X1_ * Z1 + X2_ * Z2 + X3_ * Z3))
    B3 = (g_ * b3 + g * b3_ + i * (b1_ * b2 - b2_ * b1) + (a1_ * Z1 + a2_ * Z2 + a3_ * Z3)
          + (Z1_ * a1 + Z2_ * a2 + Z3_ * a3) + i * (X1_ * Y1 + X2_ * Y2 + X3_ * Y3)
          - i * (Y1_ * X1 + Y2_ * X2 + Y3_ * X3))

    Xn1 = ((g_ * X1 + g * X1_) + (a1_ * b1 + a1 * b1_) + i * (Y1_ * b3 - Y1 * b3_)
           + i * (b2_ * Z1 - b2 * Z1_) + i * (a2_ * X3 - a3_ * X2) - i * (a2 * X3_ - a3 * X2_)
           + (Z2 * Y3_ - Z3 * Y2_) + (Z2_ * Y3 - Z3_ * Y2))
    Xn2 = ((g_ * X2 + g * X2_) + (a2_ * b1 + a2 * b1_) + i * (Y2_ * b3 - Y2 * b3_)
           + i * (b2_ * Z2 - b2 * Z2_) + i * (a3_ * X1 - a1_ * X3) - i * (a3 * X1_ - a1 * X3_)
           + (Z3 * Y1_ - Z1 * Y3_) + (Z3_ * Y1 - Z1_ * Y3))
    Xn3 = ((g_ * X3 + g * X3_) + (a3_ * b1 + a3 * b1_) + i * (Y3_ * b3 - Y3 * b3_)
           + i * (b2_ * Z3 - b2 * Z3_) + i * (a1_ * X2 - a2_ * X1) - i * (a1 * X2_ - a2 * X1_)
           + (Z1 * Y2_ - Z2 * Y1_) + (Z1_ * Y2 - Z2_ * Y1))

    Yn1 = ((g_ * Y1 + g * Y1_) + (a1_ * b2 + a1 * b2_) + i * (Z1_ * b1 - Z1 * b1_)
           + i * (b3_ * X1 - b3 * X1_) + i * (a2_ * Y3 - a3_ * Y2) - i * (a2 * Y3_ - a3 * Y2_)
           + (X2 * Z3_ - X3 * Z2_) + (X2_ * Z3 - X3_ * Z2))
    Yn2 = ((g_ * Y2 + g * Y2_) + (a2_ * b2 + a2 * b2_) + i * (Z2_ * b1 - Z2 * b1_)
           + i * (b3_ * X2 - b3 * X2_) + i * (a3_ * Y1 - a1_ * Y3) - i * (a3 * Y1_ - a1 * Y3_)
           + (X3 * Z1_ - X1 * Z3_) + (X3_ * Z1 - X1_ * Z3))
    Yn3 = ((g_ * Y3 + g * Y3_) + (a3_ * b2 + a3 * b2_) + i * (Z3_ * b1 - Z3 * b1_)
           + i * (b3_ * X3 - b3 * X3_) + i * (a1_ * Y2 - a2_ * Y1) - i * (a1 * Y2_ - a2 * Y1_)
           + (X1 * Z2_ - X2 * Z1_) + (X1_ * Z2 - X2_ * Z1))

    Zn1 = ((g_ * Z1 + g * Z1_) + (a1_ * b3 + a1 * b3_) + i * (Y1 * b1_ - Y1_ * b1)
           + i * (X1_ * b2 - X1 * b2_) + i * (a2_ * Z3 - a3_ * Z2) - i * (a2 * Z3_ - a3 * Z2_)
           + (Y2 * X3_ - Y3 * X2_) + (Y2_ * X3 - Y3_ * X2))
    Zn2 = ((g_ * Z2 + g * Z2_) + (a2_ * b3 + a2 * b3_) + i * (Y2 * b1_ - Y2_ * b1)
           + i * (X2_ * b2 - X2 * b2_) + i * (a3_ * Z1 - a1_ * Z3) - i * (a3 * Z1_ - a1 * Z3_)
           + (Y3 * X1_ - Y1 * X3_) + (Y3_ * X1 - Y1_ * X3))
    Zn3 = ((g_ * Z3 + g * Z3_) + (a3_ * b3 + a3 * b3_) + i * (Y3 * b1_ - Y3_ * b1)
           + i * (X3_ * b2 - X3 * b2_) + i * (a1_ * Z2 - a2_ * Z1) - i * (a1 * Z2_ - a2 * Z1_)
           + (Y1 * X2_ - Y2 * X1_) + (Y1_ * X2 - Y2_ * X1))

    return DiracCoords(gamma, (A1, A2, A3), (B1, B2, B3),
                       (Xn1, Xn2, Xn3), (Yn1, Yn2, Yn3), (Zn1, Zn2, Zn3))


# ------------------------------------------------------------ exponentials

def _index(generator):
    """Accept a 1-based index, a generator name or a short token."""
    if isinstance(generator, str):
        if generator in GENERATOR_NAMES:
            return GENERATOR_NAMES.index(generator) + 1
        if generator in GENERATOR_TOKENS:
            return GENERATOR_TOKENS.index(generator) + 1
        raise Dirac4Error("SHAPE", f"unknown generator {generator!r}", {})
    idx = int(generator)
    if not 1 <= idx <= 15:
        raise Dirac4Error("SHAPE", "generator index must be in 1..15", {"index": idx})
    return idx


def elementary_exp(generator, angle):
    """``exp(i phi Lambda) = cos(phi) I + i sin(phi) Lambda``."""
    L = build_dirac_generators().generator(_index(generator))
    return np.cos(angle) * I4 + 1j * np.sin(angle) * L


KLM = {"K": ("A1", "B2", "C3"), "L": ("C1", "A2", "B3"), "M": ("B1", "C2", "A3")}

# alternative commuting triples, (sign, generator)
KLM_PRIME = {
    "K'": ((-1, "C1"), (-1, "B2"), (-1, "A3")),
    "L'": ((-1, "B1"), (-1, "A2"), (-1, "C3")),
    "M'": ((-1, "A1"), (-1, "C2"), (-1, "B3")),
}


def klm_triples():
    """The three commuting triples as 1-based generator indices.

    Raises ``IDENTITY_FAIL`` if a triple does not commute or does not obey
    ``G1 G2 = G2 G1 = -G3`` (and cyclic).
    """
    gb = build_dirac_generators()
    out = {}
    for name, triple in KLM.items():
        idx = tuple(_index(t) for t in triple)
        mats = [gb.generator(i) for i in idx]
        _check_commuting(name, [(1, M) for M in mats])
        out[name] = idx
    return out


def klm_prime_triples():
    """The alternative triples as ``(sign, index)`` pairs, checked like K/L/M."""
    gb = build_dirac_generators()
    out = {}
    for name, triple in KLM_PRIME.items():
        _check_commuting(name, [(s, gb.by_name(t)) for s, t in triple])
        out[name] = tuple((s, _index(t)) for s, t in triple)
    return out


def _check_commuting(name, signed):
    mats = [s * M for s, M in signed]
    for i, j, k in _CYCLIC:
        P, Q = mats[i] @ mats[j], mats[j] @ mats[i]
        if not (np.array_equal(P, Q) and np.array_equal(P, -mats[k])):
            raise Dirac4Error("IDENTITY_FAIL", f"triple {name} fails G{i+1}G{j+1} = -G{k+1}", {})


# ------------------------------------------------------------ factored form

@dataclass(frozen=True)
class FactorAngles:
    """Fifteen real angles of ``e^{ia.alpha} e^{ib.beta} e^{ik.K} e^{il.L} e^{im.M}``."""

    a_vec: np.ndarray
    b_vec: np.ndarray
    k_vec: np.ndarray
    l_vec: np.ndarray
    m_vec: np.ndarray

    def __post_init__(self):
        for name in ("a_vec", "b_vec", "k_vec", "l_vec", "m_vec"):
            v = np.array(getattr(self, name), dtype=float)
            if v.shape != (3,):
                raise Dirac4Error("SHAPE", f"{name} must have 3 components", {"shape": list(v.shape)})
            v.setflags(write=False)
            object.__setattr__(self, name, v)

    @classmethod
    def zeros(cls):
        z = np.zeros(3)
        return cls(z, z, z, z, z)

    def as_vector(self):
        return np.concatenate([self.a_vec, self.b_vec, self.k_vec, self.l_vec, self.m_vec])

    @classmethod
    def from_vector(cls, v):
        v = np.asarray(v, dtype=float)
        if v.shape != (15,):
            raise Dirac4Error("SHAPE", "expected 15 angles", {"shape": list(v.shape)})
        return cls(v[0:3], v[3:6], v[6:9], v[9:12], v[12:15])

    def to_json(self):
        return {k: [float(x) for x in getattr(self, k)]
                for k in ("a_vec", "b_vec", "k_vec", "l_vec", "m_vec")}

    def canonical(self):
        """Equivalent angles with each rotation angle wrapped into (-pi, pi]."""
        def wrap(t):
            w = np.mod(t + np.pi, 2 * np.pi) - np.pi
            return np.where(w == -np.pi, np.pi, w)

        def wrap_vec(v):
            r = np.linalg.norm(v)
            if r <= np.pi:
                return v
            # e^{i r n.L} depends on r mod 2 pi; the shifted length may be negative
            return v * (float(wrap(r)) / r)

        return FactorAngles(wrap_vec(self.a_vec), wrap_vec(self.b_vec),
                            wrap(self.k_vec), wrap(self.l_vec), wrap(self.m_vec))


@lru_cache(maxsize=1)
def _factor_generators():
    gb = build_dirac_generators()
    alpha = np.array([gb.by_name(f"alpha{i}") for i in (1, 2, 3)])
    beta = np.array([gb.by_name(f"beta{i}") for i in (1, 2, 3)])
    klm = [np.array([gb.by_name(t) for t in KLM[s]]) for s in ("K", "L", "M")]
    for arr in [alpha, beta] + klm:
        arr.setflags(write=False)
    return alpha, beta, klm


def _sinc(r):
    return np.sinc(r / np.pi)


def _dsinc_over_r(r):
    """``(d/dr)(sin r / r) / r``, finite at ``r = 0``."""
    if r < 1e-4:
        return -1 / 3 + r * r / 30
    return (np.cos(r) - np.sin(r) / r) / (r * r)


def _vector_exp(v, gens):
    """``cos|v| + i sin|v| (v/|v|).Lambda`` and its three partial derivatives."""
    r = float(np.sqrt(v @ v))
    s = _sinc(r)
    vL = np.tensordot(v, gens, axes=1)
    E = np.cos(r) * I4 + 1j * s * vL
    ds = _dsinc_over_r(r)
    dE = np.array([-s * v[j] * I4 + 1j * s * gens[j] + 1j * ds * v[j] * vL for j in range(3)])
    return E, dE


def _commuting_exp(t, gens):
    E = I4
    for tj, L in zip(t, gens):
        E = E @ (np.cos(tj) * I4 + 1j * np.sin(tj) * L)
    dE = np.array([1j * L @ E for L in gens])
    return E, dE


def _factors(theta):
    alpha, beta, klm = _factor_generators()
    out = [_vector_exp(theta[0:3], alpha), _vector_exp(theta[3:6], beta)]
    for s in range(3):
        out.append(_commuting_exp(theta[6 + 3 * s:9 + 3 * s], klm[s]))
    return out


def factor_product(f):
    """Assemble the five-factor product for the given angles."""
    S = I4
    for E, _ in _factors(f.as_vector()):
        S = S @ E
    return S


def _product_and_jacobian(theta):
    facs = _factors(theta)
    Es = [E for E, _ in facs]
    prefix = [I4]
    for E in Es:
        prefix.append(prefix[-1] @ E)
    suffix = [I4]
    for E in reversed(Es):
        suffix.append(E @ suffix[-1])
    suffix = suffix[::-1]  # suffix[f] = E_f ... E_4
    J = np.empty((15, 4, 4), dtype=complex)
    for f, (_, dE) in enumerate(facs):
        for j in range(3):
            J[3 * f + j] = prefix[f] @ dE[j] @ suffix[f + 1]
    return prefix[-1], J


@dataclass(frozen=True)
class FitResult:
    angles: FactorAngles
    residual: float
    iterations: int
    restarts: int

    def to_json(self):
        return {"angles": self.angles.to_json(), "residual": self.residual,
                "iterations": self.iterations, "restarts": self.restarts}


def _levenberg_marquardt(U, theta, max_iter, stop):
    lam = 1e-3

    def cost(S):
        D = S - U
        return float(np.sum(D.real ** 2 + D.imag ** 2))

    S, J = _product_and_jacobian(theta)
    c = cost(S)
    it = 0
    while it < max_iter and np.sqrt(c) >= stop:
        it += 1
        D = (S - U).ravel()
        Jr = J.reshape(15, 16).T
        Jm = np.vstack([Jr.real, Jr.imag])
        r = np.concatenate([D.real, D.imag])
        H = Jm.T @ Jm
        g = Jm.T @ r
        while True:
            step = np.linalg.solve(H + lam * np.eye(15), -g)
            trial = theta + step
            S_t, J_t = _product_and_jacobian(trial)
            c_t = cost(S_t)
            if c_t < c:
                theta, S, J, c = trial, S_t, J_t, c_t
                lam = max(lam / 10, 1e-15)
                break
            lam *= 10
            if lam > 1e12:
                return theta, np.sqrt(c), it
    return theta, np.sqrt(c), it


def fit_factorization(U, seed=0, max_restarts=8, tol=1e-8, max_iter=200):
    """Find fifteen real angles whose factored product reproduces ``U``.

    Minimizes ``||factor_product(f) - U||_F^2`` by Levenberg-Marquardt with
    the analytic Jacobian. The first start and every restart draw their
    angles uniformly from ``(-pi, pi]`` using ``seed``.

    Returns
    -------
    FitResult
        Canonical angles, Frobenius residual, iterations of the final run and
        number of restarts used.

    Raises
    ------
    Dirac4Error
        ``NOT_UNITARY`` if ``U`` is not special unitary to ``1e-10``;
        ``NO_CONVERGENCE`` with the best residual if every start fails.
    """
    U = np.asarray(U, dtype=complex)
    if U.shape != (4, 4):
        raise Dirac4Error("SHAPE", "expected a 4x4 matrix", {"shape": list(U.shape)})
    defect = float(np.max(np.abs(U.conj().T @ U - I4)))
    det_defect = float(abs(np.linalg.det(U) - 1))
    if defect > 1e-10 or det_defect > 1e-10:
        raise Dirac4Error("NOT_UNITARY", "input is not special unitary",
                          {"unitarity": defect, "det": det_defect})
    rng = np.random.default_rng(seed)
    best = (np.inf, None, 0)
    for attempt in range(max_restarts + 1):
        theta0 = rng.uniform(-np.pi, np.pi, 15)
        theta, res, it = _levenberg_marquardt(U, theta0, max_iter, stop=1e-10)
        if res < best[0]:
            best = (res, theta, it)
        if res <= tol:
            angles = FactorAngles.from_vector(theta).canonical()
            final = float(np.linalg.norm(factor_product(angles) - U))
            return FitResult(angles, final, it, attempt)
    raise Dirac4Error("NO_CONVERGENCE", "no start reached the tolerance",
                      {"best_residual": best[0], "restarts": max_restarts})


# ------------------------------------------------------------ SU(2) triples

@dataclass(frozen=True)
class Su2Triple:
    """Three generators closing as ``G_i G_j = sign * i * G_k`` (cyclic)."""

    generators: tuple
    sign: int

    @property
    def names(self):
        return tuple(GENERATOR_NAMES[i - 1] for i in self.generators)


_SU2_LIST = (
    ("alpha1", "alpha2", "alpha3"), ("beta1", "beta2", "beta3"),
    ("alpha1", "A2", "A3"), ("A1", "alpha2", "A3"), ("A1", "A2", "alpha3"),
    ("alpha1", "B2", "B3"), ("B1", "alpha2", "B3"), ("B1", "B2", "alpha3"),
    ("alpha1", "C2", "C3"), ("C1", "alpha2", "C3"), ("C1", "C2", "alpha3"),
    ("beta1", "B1", "C1"), ("beta1", "B2", "C2"), ("beta1", "B3", "C3"),
    ("A1", "beta2", "C1"), ("A2", "beta2", "C2"), ("A3", "beta2", "C3"),
    ("A1", "B1", "beta3"), ("A2", "B2", "beta3"), ("A3", "B3", "beta3"),
)


@lru_cache(maxsize=1)
def su2_triples():
    """The twenty SU(2)-type triples with their product signs read off the
    multiplication table."""
    table = derive_mult_table()
    out = []
    for names in _SU2_LIST:
        idx = tuple(_index(n) for n in names)
        signs = set()
        for i, j, k in _CYCLIC:
            coeff, res = table[idx[i], idx[j]]
            if res != idx[k] or coeff.real != 0 or abs(coeff.imag) != 1:
                raise Dirac4Error("IDENTITY_FAIL", f"triple {names} does not close", {})
            signs.add(int(coeff.imag))
        for g in idx:
            if table[g, g] != (1, 0):
                raise Dirac4Error("IDENTITY_FAIL", f"{GENERATOR_NAMES[g-1]} does not square to I", {})
        if len(signs) != 1:
            raise Dirac4Error("IDENTITY_FAIL", f"triple {names} has mixed orientation", {})
        out.append(Su2Triple(idx, signs.pop()))
    return tuple(out)


def su2_matrix(triple, x):
    """Representative ``x0 I - i (x1 G1 + x2 G2 + x3 G3)``."""
    gb = build_dirac_generators()
    G = x[0] * I4
    for c, g in zip(x[1:], triple.generators):
        G = G - 1j * c * gb.generator(g)
    return G


def _check_sphere(x, name):
    x = np.asarray(x, dtype=float)
    if x.shape != (4,):
        raise Dirac4Error("SHAPE", f"{name} must have 4 components", {"shape": list(x.shape)})
    defect = float(x @ x - 1)
    if abs(defect) > 1e-10:
        raise Dirac4Error("NORM", f"{name} is off the unit 3-sphere", {"defect": defect})
    return x


def su2_compose(triple, x, x_prime):
    """Parameters of ``M(x') M(x)`` within one SU(2)-type triple.

    ``x0'' = x0' x0 - x'.x`` and ``x'' = x0' x + x0 x' + s x' x x`` where
    ``s`` is the triple's orientation sign.
    """
    x = _check_sphere(x, "x")
    xp = _check_sphere(x_prime, "x_prime")
    x0, v = x[0], x[1:]
    y0, w = xp[0], xp[1:]
    s = triple.sign
    return np.concatenate([[y0 * x0 - w @ v], y0 * v + x0 * w + s * _cross(w, v)])
