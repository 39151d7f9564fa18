import sys

import numpy as np
import pytest

from suprematrix.sampling import SeededGenerator


@pytest.fixture
def g():
    return SeededGenerator(20240611)


@pytest.fixture
def rng():
    return np.random.default_rng(7)


def random_hermitian(rng, dim, size=None, unit_trace=False):
    shape = () if size is None else (size,)
    a = rng.standard_normal(shape + (dim, dim)) + 1j * rng.standard_normal(shape + (dim, dim))
    h = a + np.conj(np.swapaxes(a, -1, -2))
    if unit_trace:
        tr = np.trace(h, axis1=-2, axis2=-1).real
        h = h + ((1.0 - tr) / dim)[..., None, None] * np.eye(dim)
    return h


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS):
        terminalreporter.write_line(line)
