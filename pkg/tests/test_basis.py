import numpy as np
import pytest
from fractions import Fraction
from hypothesis import given

from conftest import kmnl, oracle_matrix
from dirac4 import basis, params
from dirac4.basis import Direction
from dirac4.errors import Dirac4Error
from dirac4.matgen import build_gellmann_basis

LAM = build_gellmann_basis()


@given(kmnl())
def test_closed_coords_match_trace_projection(p):
    G = oracle_matrix(p)
    a = basis.to_gellmann_coords(p).as_dict()
    b = basis.gellmann_coords_from_matrix(G).as_dict()
    for key in a:
        assert abs(a[key] - b[key]) <= 1e-14 * max(1, p.max_abs()), key
    assert np.allclose(basis.gellmann_matrix(basis.to_gellmann_coords(p)), G, atol=1e-14)


@given(kmnl())
def test_unprimed_diagonal_reassembles_diagonal(p):
    c = basis.to_gellmann_coords(p)
    x3, x8, x15 = c.unprimed_diagonal()
    D = c.c0 * np.eye(4) + x3 * LAM[3] + x8 * LAM[8] + x15 * LAM[15]
    assert np.allclose(np.diag(D), np.diag(oracle_matrix(p)), atol=1e-13)


def test_primed_conversion_roundtrip():
    x = (0.3 - 1j, 2.0, -0.7 + 0.1j)
    y = basis.primed_diagonal_convert(Direction.TO_PRIMED, x)
    back = basis.primed_diagonal_convert("from_primed", y)
    assert np.allclose(back, x, atol=1e-15)
    # TO_PRIMED reproduces the same diagonal matrix
    lhs = x[0] * LAM[3] + x[1] * LAM[8] + x[2] * LAM[15]
    rhs = y[0] * LAM[3] + y[1] * LAM.lambda8p + y[2] * LAM.lambda15p
    assert np.allclose(lhs, rhs, atol=1e-15)


def test_combination_identities_hold():
    recs = basis.lambda_from_dirac_combos()
    assert len(recs) == 42
    assert {r["kind"] for r in recs} == {"combination", "diagonal matrix", "inverse", "unprimed diagonal"}


def test_diagonal_block_resolution_is_exact():
    assert basis.diagonal_block_resolution() == (Fraction(0),) * 3


def test_embed_restrict_roundtrip(rng):
    for _ in range(50):
        s = basis.random_sl3(rng)
        p = basis.embed(s)
        back = basis.restrict_to_gl3(p)
        assert np.allclose(back.as_vector(), s.as_vector(), atol=1e-15)
        assert np.allclose(oracle_matrix(p), s.matrix(), atol=1e-15)


def test_sl3_product_matches_matrix_product(rng):
    for _ in range(200):
        s1, s2 = basis.random_sl3(rng, 0.3j), basis.random_sl3(rng, 2.0)
        got = basis.compose_sl3(s1, s2).matrix()
        assert np.allclose(got, s1.matrix() @ s2.matrix(), atol=1e-13)
        full = params.compose(basis.embed(s1), basis.embed(s2))
        assert np.allclose(oracle_matrix(full), got, atol=1e-13)


def test_sl3_product_keeps_block_shape_exactly(rng):
    out = basis.compose_sl3(basis.random_sl3(rng), basis.random_sl3(rng)).matrix()
    assert np.array_equal(out[:3, 3], np.zeros(3)) and np.array_equal(out[3, :3], np.zeros(3))


def test_restrict_names_violated_condition():
    p = params.ParamsKMNL.identity().replace(m=[1, 0.5, 0, 0])
    with pytest.raises(Dirac4Error) as err:
        basis.restrict_to_gl3(p)
    assert err.value.code == "SHAPE"
    assert err.value.context["condition"] == "m1 = 0"


def test_identity_embeds_to_identity():
    assert np.array_equal(basis.embed(basis.Sl3Params.identity()).as_array(),
                          params.ParamsKMNL.identity().as_array())


def test_sl3_block_determinant_is_multiplicative(rng):
    for _ in range(100):
        s1, s2 = basis.random_sl3(rng), basis.random_sl3(rng)
        d = np.linalg.det(basis.compose_sl3(s1, s2).block3())
        assert abs(d - np.linalg.det(s1.block3()) * np.linalg.det(s2.block3())) <= 1e-10
