import random
import sys

import pytest

from qgoncarov import ONE, DeltaOperator, hahn_sequence, monomial_sequence
from qgoncarov.goncarov import seeded_grids

@pytest.fixture(scope="session")
def families():
    return [DeltaOperator(monomial_sequence()), DeltaOperator(hahn_sequence(ONE))]


@pytest.fixture(scope="session")
def grids():
    return seeded_grids(42, 12)


@pytest.fixture
def rng():
    return random.Random(20261014)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod and mod.LINES:
        terminalreporter.section("acceptance criteria")
        for line in mod.LINES:
            terminalreporter.write_line(line)
