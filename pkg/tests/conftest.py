import pytest

from corpus import ACCEPTANCE_LINES, H6, TWO_EDGES
from hyperdual import Hypergraph, gen_pendant_clique

@pytest.fixture
def h6():
    return H6


@pytest.fixture
def two_edges():
    return TWO_EDGES


@pytest.fixture
def pc3():
    return gen_pendant_clique(3)


@pytest.fixture
def empty4():
    return Hypergraph(4)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
