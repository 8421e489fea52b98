import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from dirac4 import matgen
from dirac4.errors import Dirac4Error
from dirac4.reference_forms import DIRAC_MATRICES, GELLMANN_OFFDIAGONAL, PRODUCT_TABLE, parse_matrix

I4 = np.eye(4)
G = matgen.build_gamma_basis()
D = matgen.build_dirac_generators()
METRIC = np.diag([1, -1, -1, -1])


def test_clifford_relations_exact():
    for a, b in itertools.product(range(4), repeat=2):
        anti = G.gamma[a] @ G.gamma[b] + G.gamma[b] @ G.gamma[a]
        assert np.array_equal(anti, 2 * METRIC[a, b] * I4)


def test_gamma5_squares_to_one_and_anticommutes():
    g5 = G.gamma5
    assert np.array_equal(g5 @ g5, I4)
    for g in G.gamma:
        assert np.array_equal(g5 @ g + g @ g5, np.zeros((4, 4)))
    assert np.array_equal(g5, -1j * G.gamma[0] @ G.gamma[1] @ G.gamma[2] @ G.gamma[3])


def test_weyl_layout_matches_reference_listing():
    for (name, text), M in zip(DIRAC_MATRICES.items(), G.dirac_sixteen(), strict=True):
        assert np.array_equal(M, parse_matrix(text)), name


def test_gellmann_offdiagonals_match_reference_listing():
    lam = matgen.build_gellmann_basis()
    for i, text in GELLMANN_OFFDIAGONAL.items():
        assert np.array_equal(lam[i], parse_matrix(text)), i


def test_constants_are_read_only():
    with pytest.raises(ValueError):
        G.gamma5[0, 0] = 7


@pytest.mark.parametrize("index", range(1, 16))
def test_generators_hermitian_unitary_traceless(index):
    L = D.generator(index)
    assert np.array_equal(L, L.conj().T)
    assert np.array_equal(L @ L, I4)
    assert np.trace(L) == 0


def test_generators_trace_orthogonal():
    for m, n in itertools.product(range(16), repeat=2):
        t = np.trace(D.generator(m) @ D.generator(n)) / 4
        assert t == (1 if m == n else 0)


def test_products_are_signed_generators_exactly():
    table = matgen.derive_mult_table()
    for (m, n), (c, r) in table.product.items():
        assert c in (1, -1, 1j, -1j)
        assert np.array_equal(D.generator(m) @ D.generator(n), c * D.generator(r))
    assert matgen.table_associativity_failures(table) == []


def test_alpha_beta_commute_and_each_triple_is_su2():
    for a in D.alpha:
        for b in D.beta:
            assert np.array_equal(a @ b, b @ a)
    for trip in (D.alpha, D.beta):
        for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
            assert np.array_equal(trip[i] @ trip[j], 1j * trip[k])


def test_tabulated_products_differ_only_in_known_cell():
    diff = matgen.reconcile_mult_table(matgen.derive_mult_table(), PRODUCT_TABLE)
    assert [(d["row"], d["col"], d["derived"]) for d in diff] == [("C1", "B3", "-A2")]


def test_records_are_ordered_and_json_ready():
    recs = matgen.derive_mult_table().records()
    assert len(recs) == 225
    assert [(r["m"], r["n"]) for r in recs] == sorted((r["m"], r["n"]) for r in recs)
    assert recs[0] == {"m": 1, "n": 1, "coeff": [1.0, 0.0], "result": "I"}


@given(st.sampled_from([1, -1, 1j, -1j]), st.integers(0, 15))
def test_signed_token_roundtrip(coeff, index):
    assert matgen.parse_signed(matgen.format_signed(coeff, index)) == (coeff, index)


@pytest.mark.parametrize("token", ["", "x1", "--A1", "iiA1", "A4"])
def test_malformed_tokens(token):
    assert matgen.parse_signed(token) is None


def test_match_signed_generator_rejects_sums():
    assert matgen.match_signed_generator(D.generator(1) + D.generator(2), D) is None


def test_generator_index_range():
    with pytest.raises(Dirac4Error):
        D.generator(16)


def test_gellmann_basis_normalization():
    lam = matgen.build_gellmann_basis()
    for i, j in itertools.product(range(1, 16), repeat=2):
        assert np.isclose(np.trace(lam[i] @ lam[j]), 2 * (i == j), atol=1e-15)
    for i in range(1, 16):
        assert np.allclose(lam[i], lam[i].conj().T)


def test_dirac_sixteen_traceless_and_independent():
    mats = G.dirac_sixteen()
    assert len(mats) == 15
    M = np.array([m.ravel() for m in mats] + [I4.ravel()])
    assert np.linalg.matrix_rank(M) == 16
    assert all(np.trace(m) == 0 for m in mats)
