"""Constant matrix bases: Pauli, Weyl-basis gamma matrices, Dirac generators,
Gell-Mann matrices, and the product table of the fifteen Dirac generators.

Everything is built from the Pauli matrices and the Weyl block layout, so all
entries land exactly on {0, +-1, +-i} (or simple multiples for the Gell-Mann
diagonals) and algebraic identities can be asserted with ``==``.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import Dirac4Error

IDENTITY = 0

GENERATOR_NAMES = (
    "alpha1", "alpha2", "alpha3",
    "beta1", "beta2", "beta3",
    "A1", "A2", "A3",
    "B1", "B2", "B3",
    "C1", "C2", "C3",
)

# short tokens used by the tabulated reference forms
GENERATOR_TOKENS = (
    "a1", "a2", "a3", "b1", "b2", "b3",
    "A1", "A2", "A3", "B1", "B2", "B3", "C1", "C2", "C3",
)


def _frozen(a):
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


I2 = _frozen(np.eye(2))
SIGMA1 = _frozen([[0, 1], [1, 0]])
SIGMA2 = _frozen([[0, -1j], [1j, 0]])
SIGMA3 = _frozen([[1, 0], [0, -1]])
PAULI = (SIGMA1, SIGMA2, SIGMA3)
I4 = _frozen(np.eye(4))
METRIC = np.diag([1.0, -1.0, -1.0, -1.0])
METRIC.setflags(write=False)


def block(tl, tr, bl, br):
    """Assemble a 4x4 matrix from four 2x2 blocks."""
    return _frozen(np.block([[tl, tr], [bl, br]]))


def _zero2():
    return np.zeros((2, 2), dtype=complex)


@dataclass(frozen=True)
class GammaBasis:
    """Weyl-basis Dirac matrices.

    Attributes
    ----------
    gamma : tuple of ndarray
        gamma^0 .. gamma^3.
    gamma5 : ndarray
        ``-i gamma^0 gamma^1 gamma^2 gamma^3``.
    sigma : tuple of tuple of ndarray
        ``sigma[a][b] = (gamma^a gamma^b - gamma^b gamma^a) / 4``.
    """

    gamma: tuple
    gamma5: np.ndarray
    sigma: tuple

    @property
    def gamma0(self):
        return self.gamma[0]

    @property
    def gamma1(self):
        return self.gamma[1]

    @property
    def gamma2(self):
        return self.gamma[2]

    @property
    def gamma3(self):
        return self.gamma[3]

    def dirac_sixteen(self):
        """The fifteen traceless Dirac-basis matrices in the Gell-Mann-style
        listing (gamma5, gamma0, i g5 g0, i g1, g5 g1, i g2, g5 g2, i g3, g5 g3,
        2 sigma^{0j}, 2i sigma^{12}, 2i sigma^{23}, 2i sigma^{31}).

        Returns a tuple of 15 matrices; index 0 holds the first of them.
        """
        g, g5, s = self.gamma, self.gamma5, self.sigma
        mats = [g5, g[0], 1j * g5 @ g[0]]
        for j in (1, 2, 3):
            mats += [1j * g[j], g5 @ g[j]]
        mats += [2 * s[0][1], 2 * s[0][2], 2 * s[0][3]]
        mats += [2j * s[1][2], 2j * s[2][3], 2j * s[3][1]]
        return tuple(_frozen(m) for m in mats)


@lru_cache(maxsize=None)
def build_gamma_basis():
    """Construct the Weyl-basis gamma matrices.

    ``gamma^a = [[0, sigmabar^a], [sigma^a, 0]]`` with ``sigma^a = (I, sigma_j)``,
    ``sigmabar^a = (I, -sigma_j)``.
    """
    z = _zero2()
    gam = [block(z, I2, I2, z)]
    for s in PAULI:
        gam.append(block(z, -s, s, z))
    g5 = _frozen(-1j * gam[0] @ gam[1] @ gam[2] @ gam[3])
    sig = tuple(
        tuple(_frozen(0.25 * (gam[a] @ gam[b] - gam[b] @ gam[a])) for b in range(4))
        for a in range(4)
    )
    return GammaBasis(gamma=tuple(gam), gamma5=g5, sigma=sig)


@dataclass(frozen=True)
class DiracGeneratorBasis:
    """Two commuting su(2)-type triples and their nine products.

    ``A_i = alpha_i beta_1``, ``B_i = alpha_i beta_2``, ``C_i = alpha_i beta_3``.
    """

    alpha: tuple
    beta: tuple
    A: tuple
    B: tuple
    C: tuple

    @property
    def generators(self):
        """All fifteen generators in the canonical order of ``GENERATOR_NAMES``."""
        return self.alpha + self.beta + self.A + self.B + self.C

    def generator(self, index):
        """Generator by 1-based index; index 0 returns the identity."""
        if index == IDENTITY:
            return I4
        if not 1 <= index <= 15:
            raise Dirac4Error("INDEX", "generator index must be in 1..15", {"index": index})
        return self.generators[index - 1]

    def by_name(self, name):
        return self.generators[GENERATOR_NAMES.index(name)]


@lru_cache(maxsize=None)
def build_dirac_generators():
    """Build alpha, beta and the nine products alpha_i beta_j."""
    gb = build_gamma_basis()
    g, g5 = gb.gamma, gb.gamma5
    alpha = (g[0] @ g[2], 1j * g[0] @ g5, g5 @ g[2])
    beta = (1j * g[3] @ g[1], 1j * g[3], 1j * g[1])
    alpha = tuple(_frozen(a) for a in alpha)
    beta = tuple(_frozen(b) for b in beta)
    A = tuple(_frozen(alpha[i] @ beta[0]) for i in range(3))
    B = tuple(_frozen(alpha[i] @ beta[1]) for i in range(3))
    C = tuple(_frozen(alpha[i] @ beta[2]) for i in range(3))
    return DiracGeneratorBasis(alpha=alpha, beta=beta, A=A, B=B, C=C)


@dataclass(frozen=True)
class GellMannBasis:
    """The fifteen 4x4 Gell-Mann matrices plus the primed diagonals.

    ``lambdas[i - 1]`` is lambda_i. ``lambda8p = diag(0, -1, 1, 0)`` and
    ``lambda15p = diag(0, -1, 0, 1)``.
    """

    lambdas: tuple
    lambda8p: np.ndarray
    lambda15p: np.ndarray

    def __getitem__(self, i):
        return self.lambdas[i - 1]


def _offdiag(i, j, imag):
    m = np.zeros((4, 4), dtype=complex)
    if imag:
        m[i, j], m[j, i] = -1j, 1j
    else:
        m[i, j] = m[j, i] = 1
    return m


@lru_cache(maxsize=None)
def build_gellmann_basis():
    """Standard su(4) Gell-Mann matrices and the primed diagonal pair."""
    lam = [None] * 16
    pairs = {(0, 1): (1, 2), (0, 2): (4, 5), (1, 2): (6, 7),
             (0, 3): (9, 10), (1, 3): (11, 12), (2, 3): (13, 14)}
    for (i, j), (re_idx, im_idx) in pairs.items():
        lam[re_idx] = _offdiag(i, j, False)
        lam[im_idx] = _offdiag(i, j, True)
    lam[3] = np.diag([1, -1, 0, 0]).astype(complex)
    lam[8] = np.diag([1, 1, -2, 0]).astype(complex) / np.sqrt(3)
    lam[15] = np.diag([1, 1, 1, -3]).astype(complex) / np.sqrt(6)
    return GellMannBasis(
        lambdas=tuple(_frozen(m) for m in lam[1:]),
        lambda8p=_frozen(np.diag([0, -1, 1, 0])),
        lambda15p=_frozen(np.diag([0, -1, 0, 1])),
    )


@dataclass(frozen=True)
class MultTable:
    """Products of ordered generator pairs.

    ``product[(m, n)] = (coeff, result)`` means
    ``Lambda_m Lambda_n = coeff * Lambda_result`` with ``result == IDENTITY`` for I.
    Indices are 1-based in the order of ``GENERATOR_NAMES``.
    """

    product: dict

    def __getitem__(self, key):
        return self.product[key]

    def records(self):
        """JSON-ready records ordered by (m, n)."""
        out = []
        for (m, n) in sorted(self.product):
            c, r = self.product[(m, n)]
            out.append({"m": m, "n": n, "coeff": [c.real, c.imag],
                        "result": "I" if r == IDENTITY else r})
        return out

    def structure_constants(self):
        """Dense ``E[m, n, k]`` with index 0 standing for the identity."""
        E = np.zeros((16, 16, 16), dtype=complex)
        for (m, n), (c, r) in self.product.items():
            E[m, n, r] = c
        for m in range(16):
            E[0, m, m] = E[m, 0, m] = 1
        return E


_UNITS = (1, -1, 1j, -1j)


def match_signed_generator(M, basis, atol=1e-14):
    """Find ``(coeff, index)`` with ``M == coeff * Lambda_index`` (index 0 is I).

    Returns None if ``M`` is not a unit multiple of a single basis element.
    """
    for idx in range(16):
        G = basis.generator(idx)
        c = np.trace(G.conj().T @ M) / 4
        hit = min(_UNITS, key=lambda u: abs(u - c))
        if abs(hit - c) <= atol and np.max(np.abs(M - hit * G)) <= atol:
            return complex(hit), idx
    return None


def derive_mult_table(basis=None):
    """Multiply every ordered pair of generators and name the result.

    Raises
    ------
    Dirac4Error
        ``UNRESOLVED_PRODUCT`` if some product is not a unit multiple of a
        single generator or of the identity.
    """
    basis = basis or build_dirac_generators()
    prod = {}
    for m in range(1, 16):
        for n in range(1, 16):
            M = basis.generator(m) @ basis.generator(n)
            hit = match_signed_generator(M, basis)
            if hit is None:
                raise Dirac4Error("UNRESOLVED_PRODUCT", "product is not a signed generator",
                                  {"m": m, "n": n})
            prod[(m, n)] = hit
    return MultTable(product=prod)


def format_signed(coeff, index):
    """Render ``(coeff, index)`` in the token notation, e.g. ``-iA2``."""
    name = "I" if index == IDENTITY else GENERATOR_TOKENS[index - 1]
    prefix = {1: "", -1: "-", 1j: "i", -1j: "-i"}[complex(coeff)]
    return prefix + name


def parse_signed(token):
    """Parse a token like ``-iA2`` into ``(coeff, index)``; None if malformed."""
    t = token.strip()
    coeff = 1
    if t.startswith("-"):
        coeff, t = -1, t[1:]
    elif t.startswith("+"):
        t = t[1:]
    if t.startswith("i") and len(t) > 1:
        coeff, t = coeff * 1j, t[1:]
    if t == "I":
        return complex(coeff), IDENTITY
    if t in GENERATOR_TOKENS:
        return complex(coeff), GENERATOR_TOKENS.index(t) + 1
    return None


def reconcile_mult_table(table, printed):
    """Compare a derived table with a tabulated token grid.

    Parameters
    ----------
    table : MultTable
    printed : dict
        Row token to a whitespace separated string of 15 column tokens.

    Returns
    -------
    list of dict
        One record per disagreeing or unparseable cell, with the printed
        token and the numerically derived product.
    """
    report = []
    for m, row_tok in enumerate(GENERATOR_TOKENS, start=1):
        cells = printed[row_tok].split()
        for n, cell in enumerate(cells, start=1):
            got = table[(m, n)]
            parsed = parse_signed(cell)
            if parsed is None or parsed != got:
                report.append({
                    "row": row_tok, "col": GENERATOR_TOKENS[n - 1],
                    "printed": cell, "derived": format_signed(*got),
                    "kind": "unparseable" if parsed is None else "mismatch",
                })
    return report


def table_associativity_failures(table, basis=None):
    """Return the (m, n, p) triples where the table-composed products disagree
    with each other or with the dense matrix triple product."""
    basis = basis or build_dirac_generators()

    def mul(a, b):
        (ca, ia), (cb, ib) = a, b
        if ia == IDENTITY:
            return ca * cb, ib
        if ib == IDENTITY:
            return ca * cb, ia
        c, r = table[(ia, ib)]
        return ca * cb * c, r

    bad = []
    for m in range(1, 16):
        for n in range(1, 16):
            for p in range(1, 16):
                left = mul(mul((1, m), (1, n)), (1, p))
                right = mul((1, m), mul((1, n), (1, p)))
                dense = basis.generator(m) @ basis.generator(n) @ basis.generator(p)
                if left != right or not np.array_equal(dense, left[0] * basis.generator(left[1])):
                    bad.append((m, n, p))
    return bad
