"""Pseudo-unitary groups SU(2,2) and SU(3,1).

A matrix preserves the Hermitian form ``eta`` when ``G^+ eta G = eta``. Its
generators ``L'`` then satisfy ``L'^+ eta = eta L'``. For SU(2,2) they come
from the Dirac generators by an ``i`` twist of selected members. For SU(3,1)
they are the Gell-Mann matrices with the six that couple to the fourth
component multiplied by ``i``.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .errors import Dirac4Error
from .matgen import (GENERATOR_NAMES, I4, build_dirac_generators, build_gamma_basis,
                     build_gellmann_basis)
from .unitary import _residual

CHI_MAX = 50.0

_CYCLIC = ((0, 1, 2), (1, 2, 0), (2, 0, 1))


class Signature(Enum):
    SU4 = "su4"
    SU22 = "su22"
    SU31 = "su31"

    @property
    def eta(self):
        return _ETA[self]


def _frozen(a):
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


_ETA = {
    Signature.SU4: _frozen(np.eye(4)),
    Signature.SU22: _frozen(np.diag([1, 1, -1, -1])),
    Signature.SU31: _frozen(np.diag([1, 1, 1, -1])),
}

if not np.array_equal(_ETA[Signature.SU22], -build_gamma_basis().gamma5):
    raise Dirac4Error("IDENTITY_FAIL", "eta(2,2) differs from -gamma5", {})


def su31_eta_from_dirac():
    """``eta(3,1) = (2i sigma^12 - 2 sigma^03 - gamma5 + I) / 2``."""
    gb = build_gamma_basis()
    s = gb.sigma
    return 0.5 * (2j * s[1][2] - 2 * s[0][3] - gb.gamma5 + I4)


@dataclass(frozen=True)
class PseudoGeneratorSet:
    """Fifteen generators of one signature with their labels."""

    signature: Signature
    names: tuple
    generators: tuple

    def __getitem__(self, i):
        """1-based access."""
        return self.generators[i - 1]

    def by_name(self, name):
        return self.generators[self.names.index(name)]


def _coerce(sig):
    if isinstance(sig, Signature):
        return sig
    try:
        return Signature(str(sig).lower().replace("(", "").replace(")", "").replace(",", ""))
    except ValueError:
        raise Dirac4Error("SHAPE", f"unknown signature {sig!r}", {}) from None


@lru_cache(maxsize=None)
def build_pseudo_generators(sig):
    """Generators of the given signature.

    SU4 and SU22 use the order ``alpha, beta, A, B, C``. The SU(2,2) set is
    ``alpha' = (alpha1, i alpha2, i alpha3)``, ``beta' = (beta1, i beta2,
    i beta3)`` and the nine products ``alpha'_i beta'_j``. SU31 uses the
    Gell-Mann order ``lambda1..lambda15`` with ``lambda9..lambda14`` times
    ``i``.
    """
    sig = _coerce(sig)
    if sig is Signature.SU31:
        lam = build_gellmann_basis()
        mats = [(1j if 9 <= i <= 14 else 1) * lam[i] for i in range(1, 16)]
        names = tuple(f"lambda{i}'" if 9 <= i <= 14 else f"lambda{i}" for i in range(1, 16))
        return PseudoGeneratorSet(sig, names, tuple(_frozen(m) for m in mats))
    gb = build_dirac_generators()
    alpha = [gb.by_name(f"alpha{i}") for i in (1, 2, 3)]
    beta = [gb.by_name(f"beta{i}") for i in (1, 2, 3)]
    if sig is Signature.SU22:
        twist = (1, 1j, 1j)
        alpha = [t * a for t, a in zip(twist, alpha)]
        beta = [t * b for t, b in zip(twist, beta)]
    mats = alpha + beta
    for j in range(3):          # A, B, C use beta_1, beta_2, beta_3
        mats += [alpha[i] @ beta[j] for i in range(3)]
    prime = "'" if sig is Signature.SU22 else ""
    return PseudoGeneratorSet(sig, tuple(n + prime for n in GENERATOR_NAMES),
                              tuple(_frozen(m) for m in mats))


def su22_dirac_listing():
    """SU(2,2) generators in the Dirac-matrix order ``gamma5, gamma0, ...``
    with the second through ninth multiplied by ``i``."""
    mats = build_gamma_basis().dirac_sixteen()
    return tuple(_frozen((1j if 1 <= k <= 8 else 1) * M) for k, M in enumerate(mats))


def eta_compatibility_failures(gens):
    """Names of generators with ``L'^+ eta != eta L'`` (exact comparison)."""
    eta = gens.signature.eta
    return [n for n, L in zip(gens.names, gens.generators)
            if not np.array_equal(L.conj().T @ eta, eta @ L)]


def _index(sig, generator):
    gens = build_pseudo_generators(sig)
    if isinstance(generator, str):
        for cand in (generator, generator + "'"):
            if cand in gens.names:
                return gens.names.index(cand) + 1
        if generator in GENERATOR_NAMES and sig is not Signature.SU31:
            return GENERATOR_NAMES.index(generator) + 1
        raise Dirac4Error("SHAPE", f"unknown generator {generator!r}", {})
    idx = int(generator)
    if not 1 <= idx <= 15:
        raise Dirac4Error("SHAPE", "generator index must be in 1..15", {"index": idx})
    return idx


def generator_kind(L):
    """``"compact"`` if ``L^3 = L``, ``"boost"`` if ``L^3 = -L``, else
    ``"diagonal"`` for the remaining diagonal generators."""
    L3 = L @ L @ L
    if np.allclose(L3, L, atol=1e-15, rtol=0):
        return "compact"
    if np.allclose(L3, -L, atol=1e-15, rtol=0):
        return "boost"
    if np.array_equal(L, np.diag(np.diag(L))):
        return "diagonal"
    raise Dirac4Error("IDENTITY_FAIL", "generator has no closed exponential", {})


def pseudo_elementary_exp(sig, generator, chi):
    """``exp(i chi L')`` for one generator of the signature.

    Compact generators give ``I + i sin(chi) L + (cos(chi) - 1) L^2``;
    boosts (``L^3 = -L``) give ``I + i sinh(chi) L - (cosh(chi) - 1) L^2``.
    When ``L^2 = +-I`` these are the familiar ``cos + i sin L`` and
    ``cosh + i sinh L``. Diagonal generators are exponentiated entrywise.

    Raises ``RANGE`` for ``|chi| > 50``.
    """
    sig = _coerce(sig)
    chi = float(chi)
    if abs(chi) > CHI_MAX:
        raise Dirac4Error("RANGE", "hyperbolic parameter beyond the guard", {"chi": chi, "max": CHI_MAX})
    L = build_pseudo_generators(sig)[_index(sig, generator)]
    kind = generator_kind(L)
    if kind == "diagonal":
        return np.diag(np.exp(1j * chi * np.diag(L)))
    L2 = L @ L
    if kind == "compact":
        return I4 + 1j * np.sin(chi) * L + (np.cos(chi) - 1) * L2
    return I4 + 1j * np.sinh(chi) * L - (np.cosh(chi) - 1) * L2


def pseudo_unitarity_defect(G, sig):
    """``max |G^+ eta G - eta|`` and ``|det G - 1|``."""
    eta = _coerce(sig).eta
    G = np.asarray(G)
    return (float(np.max(np.abs(G.conj().T @ eta @ G - eta))),
            float(abs(np.linalg.det(G) - 1)))


def pseudo_unitarity_residual(p, sig=Signature.SU22):
    """Residuals of the SU(2,2) conditions on ``(k, m, n, l)``.

    Same sixteen equations as for SU(4) with the right-hand sides of the
    ``l0*, n0*, l*, n*`` lines negated.
    """
    if _coerce(sig) is not Signature.SU22:
        raise Dirac4Error("SHAPE", "closed-form residual exists only for su22", {"signature": str(sig)})
    return _residual(p, -1)


def random_su22(rng, factors=8, scale=1.0):
    """Product of random elementary SU(2,2) transformations."""
    G = I4
    for _ in range(factors):
        idx = int(rng.integers(1, 16))
        G = G @ pseudo_elementary_exp(Signature.SU22, idx, scale * rng.standard_normal())
    return G


# ------------------------------------------------------------- SU(1,1)

def su11_matrix(x):
    """``x0 - i (x1 alpha1' + x2 alpha2' + x3 alpha3')``."""
    gens = build_pseudo_generators(Signature.SU22)
    G = x[0] * I4
    for c, i in zip(x[1:], (1, 2, 3)):
        G = G - 1j * c * gens[i]
    return G


def su11_norm(x):
    return x[0] ** 2 + x[1] ** 2 - x[2] ** 2 - x[3] ** 2


def su11_compose(x, x_prime):
    """Parameters of ``M(x') M(x)`` for the ``alpha'`` triple.

    ``x0'' = x0' x0 - x1' x1 + x2' x2 + x3' x3`` with cross terms of sign
    ``-, +, +`` in the three vector components.
    """
    out = []
    for name, v in (("x", x), ("x_prime", x_prime)):
        v = np.asarray(v, dtype=float)
        if v.shape != (4,):
            raise Dirac4Error("SHAPE", f"{name} must have 4 components", {"shape": list(v.shape)})
        defect = float(su11_norm(v) - 1)
        if abs(defect) > 1e-10:
            raise Dirac4Error("NORM", f"{name} is off the indefinite unit quadric", {"defect": defect})
        out.append(v)
    (x0, x1, x2, x3), (y0, y1, y2, y3) = out
    return np.array([
        y0 * x0 - y1 * x1 + y2 * x2 + y3 * x3,
        y0 * x1 + y1 * x0 - (y2 * x3 - y3 * x2),
        y0 * x2 + y2 * x0 + (y3 * x1 - y1 * x3),
        y0 * x3 + y3 * x0 + (y1 * x2 - y2 * x1),
    ])


def random_su11(rng):
    """A point on ``x0^2 + x1^2 - x2^2 - x3^2 = 1``."""
    x2, x3 = rng.standard_normal(2)
    r = np.sqrt(1 + x2 * x2 + x3 * x3)
    t = rng.uniform(-np.pi, np.pi)
    return np.array([r * np.cos(t), r * np.sin(t), x2, x3])


# ------------------------------------------------------------- triples

_SU11_LIST = (
    ("alpha1", "alpha2", "alpha3"), ("beta1", "beta2", "beta3"),
    ("alpha1", "A2", "A3"), ("A1", "alpha2", "A3"), ("A1", "A2", "alpha3"),
    ("alpha1", "B2", "B3"), ("B1", "alpha2", "B3"), ("B1", "B2", "alpha3"),
    ("alpha1", "C2", "C3"), ("C1", "alpha2", "C3"), ("C1", "C2", "alpha3"),
    ("beta1", "B1", "C1"), ("beta1", "B2", "C2"), ("beta1", "B3", "C3"),
    ("A1", "beta2", "C1"), ("A2", "beta2", "C2"), ("A3", "beta2", "C3"),
    ("A1", "B1", "beta3"), ("A2", "B2", "beta3"), ("A3", "B3", "beta3"),
)


@dataclass(frozen=True)
class PseudoTriple:
    """Three primed generators: ``squares[i]`` is ``+1`` or ``-1`` with
    ``G_i^2 = squares[i] I``; ``products[(i, j)]`` is the coefficient ``c``
    in ``G_i G_j = c G_k``."""

    names: tuple
    indices: tuple
    squares: tuple
    products: dict


def _signed_multiple(P, Q):
    """``c`` with ``P = c Q`` for ``c`` in ``{+-1, +-i}``, else ``None``."""
    for c in (1, -1, 1j, -1j):
        if np.array_equal(P, c * Q):
            return c
    return None


def _triple(gens, names):
    idx = tuple(_index(gens.signature, n) for n in names)
    mats = [gens[i] for i in idx]
    squares = []
    for n, M in zip(names, mats):
        s = _signed_multiple(M @ M, I4)
        if s not in (1, -1):
            raise Dirac4Error("IDENTITY_FAIL", f"{n} does not square to +-I", {})
        squares.append(int(s.real))
    products = {}
    for i, j, k in _CYCLIC:
        for a, b in ((i, j), (j, i)):
            c = _signed_multiple(mats[a] @ mats[b], mats[k])
            if c is None:
                raise Dirac4Error("IDENTITY_FAIL", f"{names} does not close", {})
            products[(a, b)] = c
    return PseudoTriple(tuple(gens.names[i - 1] for i in idx), idx, tuple(squares), products)


@lru_cache(maxsize=1)
def su11_triples():
    """The twenty SU(2)-type triples rebuilt from the primed generators."""
    gens = build_pseudo_generators(Signature.SU22)
    return tuple(_triple(gens, names) for names in _SU11_LIST)


def pseudo_triple_matrix(triple, x):
    """``x0 - i sum x_j G_j``; preserves ``eta`` when
    ``x0^2 + sum squares_j x_j^2 = 1`` and ``x`` is real."""
    gens = build_pseudo_generators(Signature.SU22)
    G = x[0] * I4
    for c, i in zip(x[1:], triple.indices):
        G = G - 1j * c * gens[i]
    return G


SU22_KLM = {"K'": ("A1", "B2", "C3"), "L'": ("C1", "A2", "B3"), "M'": ("B1", "C2", "A3")}


@lru_cache(maxsize=1)
def su22_klm_triples():
    """Commuting SU(2,2) triples with the sign table read off the products.

    Returns a dict ``name -> PseudoTriple``; every member commutes with
    the others and ``G_i G_j = +-G_k``.
    """
    gens = build_pseudo_generators(Signature.SU22)
    out = {}
    for name, members in SU22_KLM.items():
        t = _triple(gens, members)
        for (a, b), c in t.products.items():
            if c not in (1, -1) or t.products[(b, a)] != c:
                raise Dirac4Error("IDENTITY_FAIL", f"{name} members do not commute", {})
        out[name] = t
    return out

