import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import oracle_matrix
from dirac4 import params, unitary
from dirac4.errors import Dirac4Error
from dirac4.subgroups import CaseTag, is_in_case

angle = st.floats(-np.pi, np.pi, allow_nan=False)
I4 = np.eye(4)


def _su_error(G):
    return max(np.max(np.abs(G.conj().T @ G - I4)), abs(np.linalg.det(G) - 1))


def test_haar_samples_are_special_unitary(rng):
    U = unitary.haar_su4(rng, 50)
    assert U.shape == (50, 4, 4)
    for G in U:
        assert _su_error(G) <= 1e-13


def test_haar_is_seed_reproducible():
    a = unitary.haar_su4(np.random.default_rng(7), 3)
    b = unitary.haar_su4(np.random.default_rng(7), 3)
    assert np.array_equal(a, b)


def test_haar_first_column_phase_is_uniform():
    # phase of U[0, 0] is uniform under Haar measure; a missing R-diagonal
    # correction biases it
    U = unitary.haar_su4(np.random.default_rng(1), 4000)
    ph = np.angle(U[:, 0, 0])
    counts, _ = np.histogram(ph, bins=8, range=(-np.pi, np.pi))
    assert counts.min() > 0.8 * 4000 / 8


def test_unitarity_equations_separate_unitary_from_controls(rng):
    for U in unitary.haar_su4(rng, 100):
        assert unitary.unitarity_residual(params.from_matrix(U)).max_abs() <= 1e-12
        assert unitary.is_special_unitary(params.from_matrix(U))
    for G in unitary.random_det1(rng, 100):
        assert unitary.unitarity_residual(params.from_matrix(G)).max_abs() > 1e-3
        assert not unitary.is_special_unitary(params.from_matrix(G))


def test_residual_magnitudes_named_per_equation(rng):
    r = unitary.unitarity_residual(params.from_matrix(unitary.haar_su4(rng)))
    m = r.magnitudes()
    assert list(m) == [f"{c}{i}" for c in "kmnl" for i in range(4)]


@given(st.sampled_from([1, 2, 3]), angle, angle)
def test_two_param_groups(axis, rho, alpha):
    p = unitary.build_two_param(axis, rho, alpha)
    assert is_in_case(p, CaseTag.C)
    assert _su_error(oracle_matrix(p)) <= 1e-13
    assert all(abs(d) <= 1e-15 for d in unitary.two_param_coords(axis, rho, alpha).constraint_defects())


@given(angle, angle, angle, angle)
def test_two_param_group_closes(r1, a1, r2, a2):
    for axis in (1, 2, 3):
        p = params.compose(unitary.build_two_param(axis, r1, a1), unitary.build_two_param(axis, r2, a2))
        q = unitary.build_two_param(axis, r1 + r2, a1 + a2)
        assert p.allclose(q, 1e-13)


@given(angle)
def test_g3_at_zero_rho_is_g0(alpha):
    assert unitary.build_two_param(3, 0.0, alpha).allclose(unitary.g0(alpha), 1e-16)


def test_g3_matrix_layout():
    rho, alpha = 0.4, 1.1
    D = np.diag([np.exp(1j * rho), np.exp(-1j * rho)])
    c, s = np.cos(alpha), np.sin(alpha)
    want = np.block([[c * D, s * D], [-s * D, c * D]])
    assert np.allclose(oracle_matrix(unitary.build_two_param(3, rho, alpha)), want, atol=1e-15)


@pytest.mark.parametrize("axis", [1, 2, 3])
def test_k_axis_blocks(axis):
    rho = 0.3
    G = oracle_matrix(unitary.k_axis(axis, rho))
    sig = oracle_matrix(params.ParamsKMNL(k=np.eye(4)[axis], m=np.zeros(4), n=np.zeros(4), l=np.zeros(4)))[:2, :2]
    blk = np.cos(rho) * np.eye(2) + 1j * np.sin(rho) * sig
    assert np.allclose(G[:2, :2], blk, atol=1e-15) and np.allclose(G[2:, 2:], blk, atol=1e-15)
    assert np.allclose(G[:2, 2:], 0) and _su_error(G) <= 1e-15


def test_axis_validation():
    with pytest.raises(Dirac4Error):
        unitary.k_axis(4, 0.1)


def test_four_param_elements_and_gibbs(rng):
    for _ in range(100):
        f1, f2 = unitary.random_four_param(rng), unitary.random_four_param(rng)
        G1, G2 = (oracle_matrix(unitary.build_four_param(f)) for f in (f1, f2))
        assert _su_error(G1) <= 1e-13
        f = unitary.gibbs_compose(f1, f2)
        assert np.allclose(oracle_matrix(unitary.build_four_param(f, atol=1e-10)), G1 @ G2, atol=1e-12)


def test_four_param_is_g0_times_su2(rng):
    # G0(alpha) commutes with the block-diagonal SU(2) factor
    alpha = 0.8
    q = rng.standard_normal(4)
    q /= np.linalg.norm(q)
    q *= np.sign(q[0])
    f = unitary.FourParamUnitary.from_g0_su2(alpha, q[0], q[1:])
    blk = params.ParamsKMNL(k=[q[0], *(1j * q[1:])], m=[q[0], *(-1j * q[1:])], n=np.zeros(4), l=np.zeros(4))
    G0, S = oracle_matrix(unitary.g0(alpha)), oracle_matrix(blk)
    assert np.allclose(G0 @ S, S @ G0, atol=1e-15)
    assert np.allclose(oracle_matrix(unitary.build_four_param(f)), G0 @ S, atol=1e-14)


def test_four_param_constraint_and_pole():
    with pytest.raises(Dirac4Error) as err:
        unitary.build_four_param(unitary.FourParamUnitary(1.0, 1.0, np.zeros(3)))
    assert err.value.code == "CONSTRAINT"
    w = np.array([1.0, 0, 0])
    f = unitary.FourParamUnitary(1 / np.sqrt(2), 0, w)
    with pytest.raises(Dirac4Error) as err:
        unitary.gibbs_compose(f, f)
    assert err.value.code == "POLE"


def test_involutive_elements():
    assert unitary.is_involutive_minus_one(unitary.g0(np.pi / 2))
    assert not unitary.is_involutive_minus_one(params.ParamsKMNL.identity())


@given(angle, angle, st.sampled_from([1, 2, 3]))
def test_eigen_reduction_of_case_c_unitaries(rho, alpha, axis):
    rep = unitary.eigen_reduce_caseC(unitary.build_two_param(axis, rho, alpha))
    assert rep.eigen_one
    # k0^2 + n0^2 = cos^2 rho for these elements
    assert rep.type == ("boundary" if np.cos(rho) ** 2 >= 1 - 1e-12 else "I")
    assert rep.lambda1 >= rep.lambda2
    assert np.isclose(rep.lambda1 + rep.lambda2, rep.A + rep.B)
