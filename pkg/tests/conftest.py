import sys

import numpy as np
import pytest
from hypothesis import HealthCheck, settings, strategies as st

from dirac4 import params

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

SIGMA = np.stack([np.eye(2), np.array([[0, 1], [1, 0]]), np.array([[0, -1j], [1j, 0]]),
                  np.diag([1, -1])]).astype(complex)


def oracle_matrix(p):
    """Dense matrix written out from the block layout, one Pauli sum per block."""
    def s(v, sign):
        return sum((sign if j else 1) * v[j] * SIGMA[j] for j in range(4))

    return np.block([[s(p.k, 1), s(p.n, -1)], [-s(p.l, 1), s(p.m, -1)]])


finite = st.floats(min_value=-2, max_value=2, allow_nan=False, allow_infinity=False)
complexes = st.builds(complex, finite, finite)
vec4s = st.lists(complexes, min_size=4, max_size=4)


@st.composite
def kmnl(draw):
    return params.ParamsKMNL(k=draw(vec4s), m=draw(vec4s), n=draw(vec4s), l=draw(vec4s))


@st.composite
def seeds(draw):
    return draw(st.integers(min_value=0, max_value=2 ** 32 - 1))


@pytest.fixture
def rng():
    return np.random.default_rng(20261014)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for n in sorted(mod.SUMMARY):
            terminalreporter.write_line(lines.get(n, f"FAIL criterion {n}: {mod.SUMMARY[n]}  [did not report]"))
