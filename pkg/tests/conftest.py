import numpy as np
import pytest

from scramblecrack.cipher import EquivalentKey


@pytest.fixture
def toy_key():
    # 1-based v=(2,4,1,3), k=(3,1,4,2)
    return EquivalentKey(np.array([1, 3, 0, 2]), np.array([3, 1, 4, 2]))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_equivalent_key(rng, length):
    return EquivalentKey(rng.permutation(length), rng.integers(0, 256, length))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
