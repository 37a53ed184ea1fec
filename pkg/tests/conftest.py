import pytest

from domreconf.graph import Graph, complete_graph, cycle_graph, path_graph, star_graph
from domreconf.iso import enumerate_small_graphs

ACCEPTANCE_LINES: list[str] = []


def corpus(max_n, with_edges=True):
    return [g for n in range(1, max_n + 1) for g in enumerate_small_graphs(n) if g.m or not with_edges]


@pytest.fixture(scope="session")
def corpus6():
    return corpus(6)


@pytest.fixture(scope="session")
def corpus7():
    return corpus(7)


@pytest.fixture
def k13():
    return star_graph(3)


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def pendant_p5():
    # path 0-1-2-3-4: vertex 0 has 1 as its only neighbour
    return path_graph(5)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
