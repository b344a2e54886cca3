import numpy as np
import pytest

from chyp.sampling import random_group_element

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def rng():
    return np.random.default_rng(20261014)


@pytest.fixture(scope="session")
def group_elements():
    rng = np.random.default_rng(7)
    return [random_group_element(rng) for _ in range(1000)]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
