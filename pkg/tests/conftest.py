import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from subgraph_evc import Graph, karate  # noqa: E402

ACCEPTANCE_LINES = []


def graph_from(n, edges):
    return Graph.from_edges(n, edges)


@pytest.fixture(scope="session")
def karate_graph():
    return karate()


@pytest.fixture
def triangle():
    return graph_from(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def path3():
    return graph_from(3, [(0, 1), (1, 2)])


@pytest.fixture
def star3():
    return graph_from(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def bridged_triangles():
    """Triangles {0,1,2} and {3,4,5} joined by the bridge 2-3."""
    return graph_from(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
