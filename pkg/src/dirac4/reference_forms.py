"""Tabulated closed forms kept verbatim as comparison targets.

Nothing in the library is computed from these tables. They are the
hand-tabulated expectations that the programmatic constructions are compared
against, including the cells that turn out to be misprinted. The comparison
results feed :mod:`dirac4.reconcile`.

Matrix entries are written row by row with ``;`` between rows, using the
tokens ``0 1 -1 i -i``.
"""

import numpy as np

_ENTRY = {"0": 0, "1": 1, "-1": -1, "i": 1j, "-i": -1j,
          "2": 2, "-2": -2, "+2": 2}


def parse_matrix(text):
    """Turn ``"0 1; 1 0"`` style text into a complex array."""
    rows = [r.split() for r in text.split(";")]
    return np.array([[_ENTRY[t] for t in r] for r in rows], dtype=complex)


# Weyl-basis Dirac matrices with the i factors of the Gell-Mann-style listing.
DIRAC_MATRICES = {
    "gamma5": "-1 0 0 0; 0 -1 0 0; 0 0 1 0; 0 0 0 1",
    "gamma0": "0 0 1 0; 0 0 0 1; 1 0 0 0; 0 1 0 0",
    "i_gamma5_gamma0": "0 0 -i 0; 0 0 0 -i; i 0 0 0; 0 i 0 0",
    "i_gamma1": "0 0 0 -i; 0 0 -i 0; 0 i 0 0; i 0 0 0",
    "gamma5_gamma1": "0 0 0 1; 0 0 1 0; 0 1 0 0; 1 0 0 0",
    "i_gamma2": "0 0 0 -1; 0 0 1 0; 0 1 0 0; -1 0 0 0",
    "gamma5_gamma2": "0 0 0 -i; 0 0 i 0; 0 -i 0 0; i 0 0 0",
    "i_gamma3": "0 0 -i 0; 0 0 0 i; i 0 0 0; 0 -i 0 0",
    "gamma5_gamma3": "0 0 1 0; 0 0 0 -1; 1 0 0 0; 0 -1 0 0",
    "2sigma01": "0 1 0 0; 1 0 0 0; 0 0 0 -1; 0 0 -1 0",
    "2sigma02": "0 -i 0 0; i 0 0 0; 0 0 0 i; 0 0 -i 0",
    "2sigma03": "1 0 0 0; 0 -1 0 0; 0 0 -1 0; 0 0 0 1",
    "2i_sigma12": "1 0 0 0; 0 -1 0 0; 0 0 1 0; 0 0 0 -1",
    "2i_sigma23": "0 1 0 0; 1 0 0 0; 0 0 0 1; 0 0 1 0",
    "2i_sigma31": "0 -i 0 0; i 0 0 0; 0 0 0 -i; 0 0 i 0",
}

GELLMANN_OFFDIAGONAL = {
    1: "0 1 0 0; 1 0 0 0; 0 0 0 0; 0 0 0 0",
    2: "0 -i 0 0; i 0 0 0; 0 0 0 0; 0 0 0 0",
    3: "1 0 0 0; 0 -1 0 0; 0 0 0 0; 0 0 0 0",
    4: "0 0 1 0; 0 0 0 0; 1 0 0 0; 0 0 0 0",
    5: "0 0 -i 0; 0 0 0 0; i 0 0 0; 0 0 0 0",
    6: "0 0 0 0; 0 0 1 0; 0 1 0 0; 0 0 0 0",
    7: "0 0 0 0; 0 0 -i 0; 0 i 0 0; 0 0 0 0",
    9: "0 0 0 1; 0 0 0 0; 0 0 0 0; 1 0 0 0",
    10: "0 0 0 -i; 0 0 0 0; 0 0 0 0; i 0 0 0",
    11: "0 0 0 0; 0 0 0 1; 0 0 0 0; 0 1 0 0",
    12: "0 0 0 0; 0 0 0 -i; 0 0 0 0; 0 i 0 0",
    13: "0 0 0 0; 0 0 0 0; 0 0 0 1; 0 0 1 0",
    14: "0 0 0 0; 0 0 0 0; 0 0 0 -i; 0 0 i 0",
}

# Generator product table: row token times column token, columns in the
# order a1 a2 a3 b1 b2 b3 A1 A2 A3 B1 B2 B3 C1 C2 C3 (a = alpha, b = beta).
# The C1 x B3 cell is kept exactly as tabulated ("-A2b1").
PRODUCT_TABLE = {
    "a1": "I ia3 -ia2 A1 B1 C1 b1 iA3 -iA2 b2 iB3 -iB2 b3 iC3 -iC2",
    "a2": "-ia3 I ia1 A2 B2 C2 -iA3 b1 iA1 -iB3 b2 iB1 -iC3 b3 iC1",
    "a3": "ia2 -ia1 I A3 B3 C3 iA2 -iA1 b1 iB2 -iB1 b2 iC2 -iC1 b3",
    "b1": "A1 A2 A3 I ib3 -ib2 a1 a2 a3 iC1 iC2 iC3 -iB1 -iB2 -iB3",
    "b2": "B1 B2 B3 -ib3 I ib1 -iC1 -iC2 -iC3 a1 a2 a3 iA1 iA2 iA3",
    "b3": "C1 C2 C3 ib2 -ib1 I iB1 iB2 iB3 -iA1 -iA2 -iA3 a1 a2 a3",
    "A1": "b1 iA3 -iA2 a1 iC1 -iB1 I ia3 -ia2 ib3 -C3 C2 -ib2 B3 -B2",
    "A2": "-iA3 b1 iA1 a2 iC2 -iB2 -ia3 I ia1 C3 ib3 -C1 -B3 -ib2 B1",
    "A3": "iA2 -iA1 b1 a3 iC3 -iB3 ia2 -ia1 I -C2 C1 ib3 B2 -B1 -ib2",
    "B1": "b2 iB3 -iB2 -iC1 a1 iA1 -ib3 C3 -C2 I ia3 -ia2 ib1 -A3 A2",
    "B2": "-iB3 b2 iB1 -iC2 a2 iA2 -C3 -ib3 C1 -ia3 I ia1 A3 ib1 -A1",
    "B3": "iB2 -iB1 b2 -iC3 a3 iA3 C2 -C1 -ib3 ia2 -ia1 I -A2 A1 ib1",
    "C1": "b3 iC3 -iC2 iB1 -iA1 a1 ib2 -B3 B2 -ib1 A3 -A2b1 I ia3 -ia2",
    "C2": "-iC3 b3 iC1 iB2 -iA2 a2 B3 ib2 -B1 -A3 -ib1 A1 -ia3 I ia1",
    "C3": "iC2 -iC1 b3 iB3 -iA3 a3 -B2 B1 ib2 A2 -A1 -ib1 ia2 -ia1 I",
}

# Generator-level relations quoted alongside the table.
GENERATOR_RELATIONS = [
    # (left, right, tabulated product)
    ("a1", "a2", "ia3"),
    ("a2", "a1", "-ia1"),
    ("b1", "b2", "ib3"),
    ("b2", "b1", "-ib3"),
]

# Dirac-basis combinations equal to Gell-Mann matrices. Each entry is
# (terms on the left, terms on the right) with terms given as (coeff, symbol).
# Symbols: g0 g5 g5g3 ig5g0 ig3 g5g1 ig2 ig1 g5g2 2s01 2s02 2s03 2is12 2is23
# 2is31 for the Dirac side, l1..l15, l8p, l15p for the Gell-Mann side.
COMBINATIONS = [
    ([(1, "g0"), (1, "g5g3")], [(2, "l4")]),
    ([(1, "g0"), (-1, "g5g3")], [(2, "l11")]),
    ([(1, "ig5g0"), (1, "ig3")], [(2, "l5")]),
    ([(1, "ig5g0"), (-1, "ig3")], [(2, "l12")]),
    ([(1, "g5g1"), (1, "ig2")], [(2, "l6")]),
    ([(1, "g5g1"), (-1, "ig2")], [(2, "l9")]),
    ([(1, "ig1"), (1, "g5g2")], [(2, "l10")]),
    ([(1, "ig1"), (-1, "g5g2")], [(2, "l7")]),
    ([(1, "2s01"), (1, "2is23")], [(2, "l1")]),
    ([(1, "2s01"), (-1, "2is23")], [(-2, "l13")]),
    ([(1, "2s02"), (1, "2is31")], [(2, "l2")]),
    ([(1, "2s02"), (-1, "2is31")], [(-2, "l14")]),
    ([(1, "2s03"), (1, "2is12")], [(2, "l3")]),
    ([(1, "2s03"), (-1, "2is12")], [(2, "l15p"), (-2, "l8p")]),
    ([(1, "g5"), (1, "2s03")], [(2, "l15p")]),
    ([(1, "g5"), (-1, "2s03")], [(2, "l8p"), (-2, "l3")]),
    ([(1, "g5"), (1, "2is12")], [(2, "l8p")]),
    ([(1, "g5"), (-1, "2is12")], [(2, "l15p"), (-2, "l3")]),
]

# The six diagonal combinations above, also written out as explicit matrices.
DIAGONAL_COMBINATION_MATRICES = [
    ([(1, "2s03"), (1, "2is12")], "2 0 0 0; 0 -2 0 0; 0 0 0 0; 0 0 0 0"),
    ([(1, "2s03"), (-1, "2is12")], "0 0 0 0; 0 0 0 0; 0 0 -2 0; 0 0 0 2"),
    ([(1, "g5"), (1, "2s03")], "0 0 0 0; 0 -2 0 0; 0 0 0 0; 0 0 0 2"),
    ([(1, "g5"), (-1, "2s03")], "-2 0 0 0; 0 0 0 0; 0 0 2 0; 0 0 0 0"),
    ([(1, "g5"), (1, "2is12")], "0 0 0 0; 0 -2 0 0; 0 0 2 0; 0 0 0 0"),
    ([(1, "g5"), (-1, "2is12")], "-2 0 0 0; 0 0 0 0; 0 0 0 0; 0 0 0 2"),
]

# Dirac matrices written back in terms of Gell-Mann matrices.
INVERSE_COMBINATIONS = [
    ([(1, "g0")], [(1, "l4"), (1, "l11")]),
    ([(1, "g5g3")], [(1, "l4"), (-1, "l11")]),
    ([(1, "ig5g0")], [(1, "l5"), (1, "l12")]),
    ([(1, "ig3")], [(1, "l5"), (-1, "l12")]),
    ([(1, "g5g1")], [(1, "l6"), (1, "l9")]),
    ([(1, "ig2")], [(1, "l6"), (-1, "l9")]),
    ([(1, "ig1")], [(1, "l10"), (1, "l7")]),
    ([(1, "g5g2")], [(1, "l10"), (-1, "l7")]),
    ([(1, "2is23")], [(1, "l1"), (1, "l13")]),
    ([(1, "2s01")], [(1, "l1"), (-1, "l13")]),
    ([(1, "2is31")], [(1, "l2"), (1, "l14")]),
    ([(1, "2s02")], [(1, "l2"), (-1, "l14")]),
    ([(1, "2s03")], [(1, "l3"), (-1, "l8p"), (1, "l15p")]),
    ([(1, "2is12")], [(1, "l3"), (1, "l8p"), (-1, "l15p")]),
    ([(1, "g5")], [(-1, "l3"), (1, "l8p"), (1, "l15p")]),
]

# Unprimed diagonals through gamma5, 2 sigma^{03}, 2i sigma^{12}.
DIAGONAL_THROUGH_DIRAC = {
    "l3": [(0.5, "2s03"), (0.5, "2is12")],
    "l8": [(-1 / np.sqrt(3), "g5"), (1 / (2 * np.sqrt(3)), "2s03"),
           (-1 / (2 * np.sqrt(3)), "2is12")],
    "l15": [(-1 / np.sqrt(6), "g5"), (-1 / np.sqrt(6), "2s03"),
            (1 / np.sqrt(6), "2is12")],
}

# Elementary unitary exponentials cos(phi) + i sin(phi) Lambda as 2x2 block
# layouts. Each block is a list of (function, pauli) terms where function is
# one of "cos", "sin", "isin", "-sin", "-isin" and pauli in "I s1 s2 s3".
# A block of None is zero.
UNITARY_EXPONENTIALS = {
    "alpha1": {"tl": [("cos", "I"), ("isin", "s2")], "tr": None, "bl": None,
               "br": [("cos", "I"), ("-isin", "s2")]},
    "alpha2": {"tl": [("cos", "I")], "tr": [("-sin", "I")], "bl": [("sin", "I")],
               "br": [("cos", "I")]},
    "alpha3": {"tl": [("cos", "I")], "tr": [("isin", "s2")], "bl": [("isin", "s2")],
               "br": [("cos", "I")]},
    "beta1": {"tl": [("cos", "I"), ("isin", "s2")], "tr": None, "bl": None,
              "br": [("cos", "I"), ("isin", "s2")]},
    "beta2": {"tl": [("cos", "I")], "tr": [("sin", "s3")], "bl": [("-sin", "s3")],
              "br": [("cos", "I")]},
    "beta3": {"tl": [("cos", "I")], "tr": [("sin", "s1")], "bl": [("-sin", "s1")],
              "br": [("cos", "I")]},
    "A1": {"tl": [("cos", "I"), ("isin", "I")], "tr": None, "bl": None,
           "br": [("cos", "I"), ("-isin", "I")]},
    "A2": {"tl": [("cos", "I")], "tr": [("-sin", "s2")], "bl": [("sin", "s2")],
           "br": [("cos", "I")]},
    "A3": {"tl": [("cos", "I")], "tr": [("isin", "I")], "bl": [("isin", "I")],
           "br": [("cos", "I")]},
    "B1": {"tl": [("cos", "I")], "tr": [("isin", "s1")], "bl": [("isin", "s1")],
           "br": [("cos", "I")]},
    "B2": {"tl": [("cos", "I"), ("-isin", "s3")], "tr": None, "bl": None,
           "br": [("cos", "I"), ("-isin", "s3")]},
    "B3": {"tl": [("cos", "I"), ("-isin", "s1")], "tr": None, "bl": None,
           "br": [("cos", "I"), ("isin", "s1")]},
    "C1": {"tl": [("cos", "I")], "tr": [("-isin", "s3")], "bl": [("-isin", "s3")],
           "br": [("cos", "I")]},
    "C2": {"tl": [("cos", "I"), ("-isin", "s1")], "tr": None, "bl": None,
           "br": [("cos", "I"), ("-isin", "s1")]},
    "C3": {"tl": [("cos", "I"), ("isin", "s3")], "tr": None, "bl": None,
           "br": [("cos", "I"), ("-isin", "s3")]},
}

# Pseudo-unitary exponentials for the signature (+,+,-,-). Same layout code,
# with "cosh", "sinh", "isinh", "-sinh", "-isinh" for the noncompact ones.
# The C2 entry carries no sign between its two terms in the top-left block;
# it is recorded with the sign that makes G^+ eta G = eta and recorded as a
# reconciliation item.
PSEUDO_EXPONENTIALS = {
    "alpha2": {"tl": [("cosh", "I")], "tr": [("-isinh", "I")], "bl": [("isinh", "I")],
               "br": [("cosh", "I")]},
    "alpha3": {"tl": [("cosh", "I")], "tr": [("-sinh", "s2")], "bl": [("sinh", "s2")],
               "br": [("cosh", "I")]},
    "beta2": {"tl": [("cosh", "I")], "tr": [("isinh", "s3")], "bl": [("-isinh", "s3")],
              "br": [("cosh", "I")]},
    "beta3": {"tl": [("cosh", "I")], "tr": [("isinh", "s1")], "bl": [("-isinh", "s1")],
              "br": [("cosh", "I")]},
    "A2": {"tl": [("cosh", "I")], "tr": [("-isinh", "s2")], "bl": [("isinh", "s2")],
           "br": [("cosh", "I")]},
    "A3": {"tl": [("cosh", "I")], "tr": [("-sinh", "I")], "bl": [("-sinh", "I")],
           "br": [("cosh", "I")]},
    "B1": {"tl": [("cosh", "I")], "tr": [("-sinh", "s1")], "bl": [("-sinh", "s1")],
           "br": [("cosh", "I")]},
    "C1": {"tl": [("cosh", "I")], "tr": [("sinh", "s3")], "bl": [("sinh", "s3")],
           "br": [("cosh", "I")]},
    "B2": {"tl": [("cos", "I"), ("isin", "s3")], "tr": None, "bl": None,
           "br": [("cos", "I"), ("isin", "s3")]},
    "B3": {"tl": [("cos", "I"), ("isin", "s1")], "tr": None, "bl": None,
           "br": [("cos", "I"), ("-isin", "s1")]},
    "C2": {"tl": [("cos", "I"), ("isin", "s1")], "tr": None, "bl": None,
           "br": [("cos", "I"), ("isin", "s1")]},
    "C3": {"tl": [("cos", "I"), ("-isin", "s3")], "tr": None, "bl": None,
           "br": [("cos", "I"), ("isin", "s3")]},
}

# The unitary generators themselves as 2x2 block layouts, entries (coeff, pauli).
GENERATOR_BLOCKS = {
    "alpha1": {"tl": [(1, "s2")], "br": [(-1, "s2")]},
    "alpha2": {"tr": [(1j, "I")], "bl": [(-1j, "I")]},
    "alpha3": {"tr": [(1, "s2")], "bl": [(1, "s2")]},
    "beta1": {"tl": [(1, "s2")], "br": [(1, "s2")]},
    "beta2": {"tr": [(-1j, "s3")], "bl": [(1j, "s3")]},
    "beta3": {"tr": [(-1j, "s1")], "bl": [(1j, "s1")]},
    "A1": {"tl": [(1, "I")], "br": [(-1, "I")]},
    "A2": {"tr": [(1j, "s2")], "bl": [(-1j, "s2")]},
    "A3": {"tr": [(1, "I")], "bl": [(1, "I")]},
    "B1": {"tr": [(1, "s1")], "bl": [(1, "s1")]},
    "B2": {"tl": [(-1, "s3")], "br": [(-1, "s3")]},
    "B3": {"tl": [(-1, "s1")], "br": [(1, "s1")]},
    "C1": {"tr": [(-1, "s3")], "bl": [(-1, "s3")]},
    "C2": {"tl": [(-1, "s1")], "br": [(-1, "s1")]},
    "C3": {"tl": [(1, "s3")], "br": [(-1, "s3")]},
}

# Signs of the primed generators relative to the unitary ones:
# Lambda' = factor * Lambda.
PRIMED_FACTORS = {
    "alpha1": 1, "alpha2": 1j, "alpha3": 1j,
    "beta1": 1, "beta2": 1j, "beta3": 1j,
    "A1": 1, "B1": 1j, "C1": 1j,
    "A2": 1j, "B2": -1, "C2": -1,
    "A3": 1j, "B3": -1, "C3": -1,
}

# Primed generators written as 2x2 block layouts, entries (coeff, pauli).
PRIMED_BLOCKS = {
    "alpha2": {"tr": [(-1, "I")], "bl": [(1, "I")]},
    "alpha3": {"tr": [(1j, "s2")], "bl": [(1j, "s2")]},
    "beta2": {"tr": [(1, "s3")], "bl": [(-1, "s3")]},
    "beta3": {"tr": [(1, "s1")], "bl": [(-1, "s1")]},
    "A1": {"tl": [(1, "I")], "br": [(-1, "I")]},
    "B2": {"tl": [(1, "s3")], "br": [(1, "s3")]},
    "C3": {"tl": [(-1, "s3")], "br": [(1, "s3")]},
    "C1": {"tr": [(-1j, "s3")], "bl": [(-1j, "s3")]},
    "A2": {"tr": [(-1, "s2")], "bl": [(1, "s2")]},
    "B3": {"tl": [(1, "s1")], "br": [(-1, "s1")]},
    "B1": {"tr": [(1j, "s1")], "bl": [(1j, "s1")]},
    "C2": {"tl": [(1, "s1")], "br": [(1, "s1")]},
    "A3": {"tr": [(1j, "I")], "bl": [(1j, "I")]},
}

# Generator triples of the SU(2)-type split, tokens as above.
SU2_TRIPLES = [
    ("a1", "a2", "a3"), ("b1", "b2", "b3"),
    ("a1", "A2", "A3"), ("A1", "a2", "A3"), ("A1", "A2", "a3"),
    ("a1", "B2", "B3"), ("B1", "a2", "B3"), ("B1", "B2", "a3"),
    ("a1", "C2", "C3"), ("C1", "a2", "C3"), ("C1", "C2", "a3"),
    ("b1", "B1", "C1"), ("b1", "B2", "C2"), ("b1", "B3", "C3"),
    ("A1", "b2", "C1"), ("A2", "b2", "C2"), ("A3", "b2", "C3"),
    ("A1", "B1", "b3"), ("A2", "B2", "b3"), ("A3", "B3", "b3"),
]

# Commuting triples of the factored form.
KLM_TRIPLES = {"K": ("A1", "B2", "C3"), "L": ("C1", "A2", "B3"), "M": ("B1", "C2", "A3")}

# The alternative commuting triples as tabulated (signed products a_i b_j).
KLM_PRIME_TABULATED = {
    "K'": ("-a1b3", "-a2b2", "-a3b3"),
    "L'": ("-a1b2", "-a2b1", "-a3b2"),
    "M'": ("-a1b1", "-a2b3", "-a3b2"),
}


_PAULI_TOKENS = {"I": np.eye(2), "s1": np.array([[0, 1], [1, 0]]),
                 "s2": np.array([[0, -1j], [1j, 0]]), "s3": np.array([[1, 0], [0, -1]])}

_FUNCTIONS = {
    "cos": np.cos, "sin": np.sin, "cosh": np.cosh, "sinh": np.sinh,
    "-sin": lambda t: -np.sin(t), "-sinh": lambda t: -np.sinh(t),
    "isin": lambda t: 1j * np.sin(t), "-isin": lambda t: -1j * np.sin(t),
    "isinh": lambda t: 1j * np.sinh(t), "-isinh": lambda t: -1j * np.sinh(t),
}


def layout_matrix(layout, angle=None):
    """Evaluate a 2x2 block layout.

    With ``angle`` the entries are ``(function, pauli)`` terms of an
    exponential; without it they are ``(coeff, pauli)`` terms of a generator.
    """
    out = np.zeros((4, 4), dtype=complex)
    corners = {"tl": (0, 0), "tr": (0, 2), "bl": (2, 0), "br": (2, 2)}
    for key, (r, c) in corners.items():
        terms = layout.get(key)
        if not terms:
            continue
        for f, p in terms:
            w = _FUNCTIONS[f](angle) if angle is not None else f
            out[r:r + 2, c:c + 2] += w * _PAULI_TOKENS[p]
    return out
