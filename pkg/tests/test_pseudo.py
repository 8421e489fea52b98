import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.linalg import expm

from conftest import oracle_matrix
from dirac4 import params, pseudo
from dirac4.errors import Dirac4Error
from dirac4.matgen import build_gamma_basis
from dirac4.pseudo import Signature

I4 = np.eye(4)
SIGS = [Signature.SU22, Signature.SU31]


def test_eta_of_22_is_minus_gamma5():
    assert np.array_equal(Signature.SU22.eta, -build_gamma_basis().gamma5)


def test_eta_of_31_from_dirac_matrices():
    assert np.array_equal(pseudo.su31_eta_from_dirac(), Signature.SU31.eta)


@pytest.mark.parametrize("sig", list(Signature))
def test_generators_are_eta_compatible(sig):
    gens = pseudo.build_pseudo_generators(sig)
    assert len(gens.generators) == 15
    assert pseudo.eta_compatibility_failures(gens) == []
    for L in gens.generators:
        assert abs(np.trace(L)) <= 1e-15


def test_untwisted_generators_fail_22_compatibility():
    # the plain Hermitian set is not compatible with eta(2,2): the twist matters
    plain = pseudo.build_pseudo_generators(Signature.SU4)
    bad = pseudo.PseudoGeneratorSet(Signature.SU22, plain.names, plain.generators)
    assert len(pseudo.eta_compatibility_failures(bad)) > 0


def test_dirac_listing_is_eta_compatible():
    eta = Signature.SU22.eta
    for L in pseudo.su22_dirac_listing():
        assert np.array_equal(L.conj().T @ eta, eta @ L)


chis = st.floats(-6, 6, allow_nan=False)


@given(st.sampled_from(SIGS), st.integers(1, 15), chis)
def test_closed_exponential_matches_expm(sig, index, chi):
    L = pseudo.build_pseudo_generators(sig)[index]
    E = pseudo.pseudo_elementary_exp(sig, index, chi)
    want = expm(1j * chi * L)
    scale = np.max(np.abs(want))
    assert np.max(np.abs(E - want)) <= 1e-13 * scale


@given(st.sampled_from(SIGS), st.integers(1, 15), st.floats(-2, 2, allow_nan=False))
def test_elementary_exponentials_preserve_eta(sig, index, chi):
    E = pseudo.pseudo_elementary_exp(sig, index, chi)
    defect, det = pseudo.pseudo_unitarity_defect(E, sig)
    assert defect <= 1e-14 and det <= 1e-14


@pytest.mark.parametrize("chi", [-8.0, 5.0, 12.0])
@pytest.mark.parametrize("sig", SIGS)
def test_large_parameter_defect_is_roundoff_relative_to_norm(sig, chi):
    for index in range(1, 16):
        E = pseudo.pseudo_elementary_exp(sig, index, chi)
        defect, _ = pseudo.pseudo_unitarity_defect(E, sig)
        assert defect <= 1e-14 * max(1.0, np.linalg.norm(E, 2) ** 2)


def test_generator_kinds_cover_both_classes():
    kinds = {pseudo.generator_kind(L) for L in pseudo.build_pseudo_generators("su22").generators}
    assert kinds == {"compact", "boost"}
    kinds31 = [pseudo.generator_kind(L) for L in pseudo.build_pseudo_generators("su31").generators]
    assert kinds31.count("boost") == 6


def test_range_guard():
    with pytest.raises(Dirac4Error) as err:
        pseudo.pseudo_elementary_exp("su22", 2, 50.5)
    assert err.value.code == "RANGE"
    pseudo.pseudo_elementary_exp("su22", 2, 50.0)


def test_signature_aliases():
    assert pseudo._coerce("SU(2,2)") is Signature.SU22
    with pytest.raises(Dirac4Error):
        pseudo._coerce("so5")


def test_random_su22_is_pseudo_unitary(rng):
    for _ in range(20):
        G = pseudo.random_su22(rng)
        defect, det = pseudo.pseudo_unitarity_defect(G, "su22")
        scale = np.linalg.norm(G, 2) ** 2
        assert defect <= 1e-12 * scale and det <= 1e-12 * scale
        r = pseudo.pseudo_unitarity_residual(params.from_matrix(G))
        assert r.max_abs() <= 1e-12 * scale


def test_closed_residual_rejects_su4_elements(rng):
    from dirac4 import unitary
    U = unitary.haar_su4(rng)
    assert pseudo.pseudo_unitarity_residual(params.from_matrix(U)).max_abs() > 1e-3


@pytest.mark.parametrize("sig", ["su4", "su31"])
def test_closed_residual_only_for_22(sig):
    with pytest.raises(Dirac4Error) as err:
        pseudo.pseudo_unitarity_residual(params.ParamsKMNL.identity(), sig)
    assert err.value.code == "SHAPE"


def test_su11_composition(rng):
    for _ in range(200):
        x, xp = pseudo.random_su11(rng), pseudo.random_su11(rng)
        assert abs(pseudo.su11_norm(x) - 1) <= 1e-12
        out = pseudo.su11_compose(x, xp)
        want = pseudo.su11_matrix(xp) @ pseudo.su11_matrix(x)
        got = pseudo.su11_matrix(out)
        assert np.max(np.abs(got - want)) <= 1e-12 * np.max(np.abs(want))
        assert abs(pseudo.su11_norm(out) - 1) <= 1e-11 * max(1, out @ out)
        eta = Signature.SU22.eta
        assert np.allclose(got.conj().T @ eta @ got, eta, atol=1e-10 * np.max(np.abs(got)) ** 2)


def test_su11_norm_guard():
    with pytest.raises(Dirac4Error) as err:
        pseudo.su11_compose([1, 0, 1, 0], [1, 0, 0, 0])
    assert err.value.code == "NORM"


def test_primed_triples_close_and_preserve_eta(rng):
    eta = Signature.SU22.eta
    trips = pseudo.su11_triples()
    assert len(trips) == 20
    for t in trips:
        sq = np.array(t.squares)
        # real point on x0^2 + sum squares_j x_j^2 = 1
        v = rng.uniform(-0.8, 0.8, 3)
        r = 1 - np.sum(sq * v * v)
        if r <= 0:
            v = v * 0.1
            r = 1 - np.sum(sq * v * v)
        G = pseudo.pseudo_triple_matrix(t, np.concatenate([[np.sqrt(r)], v]))
        assert np.max(np.abs(G.conj().T @ eta @ G - eta)) <= 1e-14


def test_su22_commuting_triple_signs():
    # products G_i G_j = c G_k read off the generator matrices
    want = {
        "K'": {(0, 1): -1, (1, 2): -1, (0, 2): -1},
        "L'": {(0, 1): -1, (1, 2): 1, (0, 2): 1},
        "M'": {(0, 1): 1, (1, 2): 1, (0, 2): -1},
    }
    trips = pseudo.su22_klm_triples()
    gens = pseudo.build_pseudo_generators("su22")
    for name, signs in want.items():
        t = trips[name]
        M = [gens[i] for i in t.indices]
        for (i, j), c in signs.items():
            k = 3 - i - j
            assert t.products[(i, j)] == c == t.products[(j, i)]
            assert np.array_equal(M[i] @ M[j], c * M[k])


def test_k_prime_members_commute_with_each_other():
    gens = pseudo.build_pseudo_generators("su22")
    for t in pseudo.su22_klm_triples().values():
        M = [gens[i] for i in t.indices]
        for i in range(3):
            for j in range(3):
                assert np.array_equal(M[i] @ M[j], M[j] @ M[i])


def test_dense_oracle_agrees_for_pseudo_elements(rng):
    G = pseudo.random_su22(rng)
    assert np.allclose(oracle_matrix(params.from_matrix(G)), G, atol=1e-13 * np.max(np.abs(G)))
