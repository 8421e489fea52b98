import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.linalg import expm

from conftest import kmnl, oracle_matrix
from dirac4 import factor, unitary
from dirac4.errors import Dirac4Error
from dirac4.matgen import build_dirac_generators

GB = build_dirac_generators()
I4 = np.eye(4)
cparts = st.floats(-2, 2, allow_nan=False, allow_infinity=False)
coords16 = st.lists(st.builds(complex, cparts, cparts), min_size=16, max_size=16) \
    .map(factor.DiracCoords.from_vector)
dyadic = st.lists(st.builds(lambda a, b: complex(a, b) / 4, st.integers(-8, 8), st.integers(-8, 8)),
                  min_size=16, max_size=16).map(factor.DiracCoords.from_vector)


@given(kmnl())
def test_coordinate_roundtrip(p):
    G = oracle_matrix(p)
    d = factor.dirac_coords(G)
    assert np.allclose(factor.coords_matrix(d), G, atol=1e-14)


@given(coords16, coords16)
def test_group_law_is_matrix_product(d1, d2):
    M = factor.coords_matrix(d1) @ factor.coords_matrix(d2)
    got = factor.coords_matrix(factor.compose_dirac_coords(d1, d2))
    assert np.max(np.abs(got - M)) <= 1e-12 * max(1, np.max(np.abs(M)))


@given(coords16, coords16)
def test_cyclic_and_long_forms_agree(d1, d2):
    a = factor.compose_dirac_coords(d1, d2).as_vector()
    b = factor.compose_dirac_coords_long(d1, d2).as_vector()
    assert np.max(np.abs(a - b)) <= 1e-13 * max(1, np.max(np.abs(a)))


@given(dyadic, dyadic)
def test_forms_agree_exactly_on_dyadic_inputs(d1, d2):
    a = factor.compose_dirac_coords(d1, d2).as_vector()
    b = factor.compose_dirac_coords_long(d1, d2).as_vector()
    assert np.array_equal(a, b)


def test_identity_coords():
    d = factor.DiracCoords.identity()
    assert np.array_equal(factor.coords_matrix(d), I4)
    e = factor.DiracCoords.from_vector(np.arange(16) + 0.5j)
    assert np.array_equal(factor.compose_dirac_coords(d, e).as_vector(), e.as_vector())


def test_bad_coordinate_shape():
    with pytest.raises(Dirac4Error):
        factor.DiracCoords.from_vector(np.zeros(15))


@pytest.mark.parametrize("index", range(1, 16))
def test_elementary_exp_matches_expm(index):
    for phi in (-2.1, 0.37, 3.0):
        want = expm(1j * phi * GB.generator(index))
        assert np.max(np.abs(factor.elementary_exp(index, phi) - want)) <= 1e-14


def test_generator_lookup_by_name_and_token():
    assert np.array_equal(factor.elementary_exp("alpha2", 0.5), factor.elementary_exp(2, 0.5))
    with pytest.raises(Dirac4Error):
        factor.elementary_exp(0, 0.1)
    with pytest.raises(Dirac4Error):
        factor.elementary_exp("nope", 0.1)


def test_klm_triples_commute_and_close():
    for name, idx in factor.klm_triples().items():
        M = [GB.generator(i) for i in idx]
        for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
            assert np.array_equal(M[i] @ M[j], M[j] @ M[i])
            assert np.array_equal(M[i] @ M[j], -M[k]), name
    assert set(factor.klm_prime_triples()) == {"K'", "L'", "M'"}


def _independent_product(f):
    a, b = f.a_vec, f.b_vec
    alpha = [GB.by_name(f"alpha{i}") for i in (1, 2, 3)]
    beta = [GB.by_name(f"beta{i}") for i in (1, 2, 3)]
    S = expm(1j * sum(x * L for x, L in zip(a, alpha))) @ expm(1j * sum(x * L for x, L in zip(b, beta)))
    for vec, key in ((f.k_vec, "K"), (f.l_vec, "L"), (f.m_vec, "M")):
        S = S @ expm(1j * sum(x * GB.by_name(n) for x, n in zip(vec, factor.KLM[key])))
    return S


@given(st.lists(st.floats(-4, 4, allow_nan=False), min_size=15, max_size=15))
def test_factor_product_matches_expm(v):
    f = factor.FactorAngles.from_vector(v)
    S = factor.factor_product(f)
    assert np.max(np.abs(S - _independent_product(f))) <= 1e-12
    assert np.allclose(S.conj().T @ S, I4, atol=1e-13)
    assert abs(np.linalg.det(S) - 1) <= 1e-13


@given(st.lists(st.floats(-9, 9, allow_nan=False), min_size=15, max_size=15))
def test_canonical_angles_give_same_product(v):
    f = factor.FactorAngles.from_vector(v)
    c = f.canonical()
    assert np.all(np.abs(c.k_vec) <= np.pi) and np.linalg.norm(c.a_vec) <= np.pi + 1e-12
    assert np.max(np.abs(factor.factor_product(c) - factor.factor_product(f))) <= 1e-12


@settings(max_examples=10)
@given(st.integers(0, 2**32 - 1))
def test_fit_reconstructs_haar_samples(seed):
    U = unitary.haar_su4(np.random.default_rng(seed))
    res = factor.fit_factorization(U, seed=seed)
    assert res.residual <= 1e-8
    assert np.max(np.abs(_independent_product(res.angles) - U)) <= 1e-8


def test_fit_rejects_non_unitary_and_bad_shape(rng):
    G = unitary.random_det1(rng)
    with pytest.raises(Dirac4Error) as err:
        factor.fit_factorization(G)
    assert err.value.code == "NOT_UNITARY"
    with pytest.raises(Dirac4Error) as err:
        factor.fit_factorization(np.eye(3))
    assert err.value.code == "SHAPE"


def test_fit_is_seed_deterministic():
    U = unitary.haar_su4(np.random.default_rng(5))
    a, b = factor.fit_factorization(U, seed=3), factor.fit_factorization(U, seed=3)
    assert a.to_json() == b.to_json()


def test_su2_triples_signs_and_closure():
    trips = factor.su2_triples()
    assert len(trips) == 20 and all(t.sign == 1 for t in trips)
    for t in trips:
        M = [GB.generator(g) for g in t.generators]
        for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
            assert np.array_equal(M[i] @ M[j], t.sign * 1j * M[k]), t.names


def _unit4(draw_list):
    x = np.array(draw_list)
    n = np.linalg.norm(x)
    return x / n if n > 1e-3 else np.array([1.0, 0, 0, 0])


unit4 = st.lists(st.floats(-1, 1, allow_nan=False), min_size=4, max_size=4).map(_unit4)


@given(st.integers(0, 19), unit4, unit4)
def test_su2_compose_matches_matrices(i, x, xp):
    t = factor.su2_triples()[i]
    out = factor.su2_compose(t, x, xp)
    want = factor.su2_matrix(t, xp) @ factor.su2_matrix(t, x)
    assert np.max(np.abs(factor.su2_matrix(t, out) - want)) <= 1e-13
    assert abs(out @ out - 1) <= 1e-13


def test_su2_compose_rejects_points_off_sphere():
    t = factor.su2_triples()[0]
    with pytest.raises(Dirac4Error) as err:
        factor.su2_compose(t, [1, 1, 0, 0], [1, 0, 0, 0])
    assert err.value.code == "NORM"
