import pytest

from stag import Graph, complete_graph, cycle_graph, path_graph


def _g(pairs):
    return Graph.from_pairs(pairs)


@pytest.fixture
def c3():
    return cycle_graph(3)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def c6():
    return cycle_graph(6)


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def k5():
    return complete_graph(5)


@pytest.fixture
def diamond():
    return _g([(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])


@pytest.fixture
def theta():
    # two degree-3 vertices joined by three internally disjoint paths
    return _g([(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 2)])


@pytest.fixture
def bowtie():
    return _g([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])


@pytest.fixture
def triangle_pendant():
    return _g([(0, 1), (1, 2), (2, 0), (2, 3)])


@pytest.fixture
def k13():
    return _g([(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return _g(outer + spokes + inner)
