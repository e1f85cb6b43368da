import sys
import zlib

import numpy as np
import pytest
from hypothesis import strategies as st

from olshanski import (ComplexOscillatorGroup, FockSpace, OscillatorGroup, Semigroup, Spectrum)

SPECTRUM = Spectrum(np.array([1.0, 2.5]))


@pytest.fixture
def sp():
    return SPECTRUM


@pytest.fixture
def R(sp):
    return OscillatorGroup(sp)


@pytest.fixture
def G(sp):
    return ComplexOscillatorGroup(sp)


@pytest.fixture
def S(sp):
    return Semigroup(sp)


@pytest.fixture(scope="session")
def fock():
    return FockSpace(SPECTRUM, 30)


@pytest.fixture
def rng(request):
    # stable per-test stream, independent of PYTHONHASHSEED
    return np.random.default_rng(zlib.crc32(request.node.name.encode()))


def rand_vec(rng, n=2, rmax=1.0):
    v = rng.normal(size=n) + 1j * rng.normal(size=n)
    return v / np.linalg.norm(v) * rmax * rng.uniform()


finite = st.floats(min_value=-3, max_value=3, allow_nan=False)
positive = st.floats(min_value=0.1, max_value=3, allow_nan=False)
vectors = st.lists(st.tuples(st.floats(-1, 1), st.floats(-1, 1)), min_size=2, max_size=2).map(
    lambda pairs: np.array([complex(a, b) for a, b in pairs]))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)
