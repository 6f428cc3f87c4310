import networkx as nx
import pytest

from src.graphs.generator import complete_graph, cycle_graph, path_graph, petersen_graph, relabel_from_one
from src.graphs.graph import Graph


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long acceptance sweeps, deselect with -m 'not slow'")


@pytest.fixture
def k4() -> Graph:
    return complete_graph(4)


@pytest.fixture
def k33() -> Graph:
    return relabel_from_one(nx.complete_bipartite_graph(3, 3))


@pytest.fixture
def petersen() -> Graph:
    return petersen_graph()


@pytest.fixture
def p5() -> Graph:
    return path_graph(4)


@pytest.fixture
def c5() -> Graph:
    return cycle_graph(5)


@pytest.fixture
def double_edge_graph() -> Graph:
    """
    Four degree-3 nodes 1..4: 1-2 and 3-4 direct, two 2-x-y-3 chains,
    and a 6-cycle loop through five degree-2 nodes at each of 1 and 4
    """
    edges = [
        (1, 5), (5, 6), (6, 7), (7, 8), (8, 9), (9, 1),
        (4, 10), (10, 11), (11, 12), (12, 13), (13, 14), (14, 4),
        (1, 2), (3, 4),
        (2, 15), (15, 16), (16, 3),
        (2, 17), (17, 18), (18, 3),
    ]
    return Graph.from_edges(range(1, 19), edges)


@pytest.fixture
def dimacs_text() -> str:
    return "c a small sample\np edge 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n"


@pytest.fixture(scope="session")
def atlas_graphs():
    """Every connected graph on 1..7 nodes with maximum degree 3, ids 1..n"""
    graphs = []
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n == 0 or not nx.is_connected(g):
            continue
        if max((d for _, d in g.degree()), default=0) > 3:
            continue
        graphs.append(relabel_from_one(g))
    return graphs
