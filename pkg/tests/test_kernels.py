import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra.numpy import arrays

from dirac4 import kernels

BACKENDS = kernels.available_backends()
compiled = pytest.mark.skipif("cython" not in BACKENDS, reason="compiled extension not built")

parts = st.floats(-3, 3, allow_nan=False, allow_infinity=False)
stacks = st.integers(1, 6).flatmap(
    lambda n: st.tuples(arrays(float, (n, 4, 4), elements=parts), arrays(float, (n, 4, 4), elements=parts))
).map(lambda t: t[0] + 1j * t[1])


def test_backend_is_reported():
    assert kernels.BACKEND in BACKENDS


@compiled
@given(stacks, stacks)
def test_compose_backends_agree(P1, P2):
    n = min(len(P1), len(P2))
    P1, P2 = P1[:n], P2[:n]
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    assert np.allclose(py.compose(P1, P2), cy.compose(P1, P2), rtol=0, atol=1e-12)


@compiled
@pytest.mark.parametrize("name", ["adjugate", "det_expanded", "det_compact", "to_matrix"])
@given(P=stacks)
def test_unary_backends_agree(name, P):
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    a, b = getattr(py, name)(P), getattr(cy, name)(P)
    assert a.shape == b.shape
    assert np.allclose(a, b, rtol=0, atol=1e-11)


@pytest.mark.parametrize("backend", sorted(BACKENDS))
def test_shapes_are_preserved(backend):
    k = BACKENDS[backend]
    P = np.zeros((2, 3, 4, 4), dtype=complex)
    assert k.compose(P, P).shape == (2, 3, 4, 4)
    assert k.det_expanded(P).shape == (2, 3)
    assert k.to_matrix(P).shape == (2, 3, 4, 4)
    assert k.from_matrix(k.to_matrix(P)).shape == (2, 3, 4, 4)
    single = np.zeros((4, 4), dtype=complex)
    assert k.compose(single, single).shape == (4, 4)
    assert np.shape(k.det_compact(single)) == ()


@pytest.mark.parametrize("backend", sorted(BACKENDS))
def test_compose_broadcasts_single_left_factor(backend):
    k = BACKENDS[backend]
    rng = np.random.default_rng(3)
    P = rng.standard_normal((5, 4, 4)) + 1j * rng.standard_normal((5, 4, 4))
    out = k.compose(P[0], P)
    for i in range(5):
        assert np.allclose(out[i], k.compose(P[0], P[i]), atol=1e-14)


def test_forced_python_backend():
    import subprocess
    import sys
    code = "import dirac4.kernels as k; print(k.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env={"DIRAC4_KERNELS": "python", "PATH": ""}, check=True)
    assert out.stdout.strip() == "python"
