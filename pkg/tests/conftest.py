import sys

import numpy as np
import pytest

from geoqm.pauli import SIGMA0, SIGMA1, SIGMA2, SIGMA3


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def paulis():
    return SIGMA0, SIGMA1, SIGMA2, SIGMA3


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
