import networkx as nx
import pytest

from src.graphs.generator import complete_graph, cycle_graph, path_graph, petersen_graph, random_subcubic


@pytest.mark.parametrize("n, p3, seed", [(1, 0.5, 0), (2, 1.0, 3), (8, 0.5, 1), (18, 0.75, 7), (40, 1.0, 2)])
def test_random_subcubic_is_connected_and_subcubic(n, p3, seed):
    g = random_subcubic(n, p3, seed)
    assert g.nodes == frozenset(range(1, n + 1))
    assert g.max_degree() <= 3
    assert g.is_connected()


def test_random_subcubic_is_deterministic():
    assert random_subcubic(20, 0.6, 11) == random_subcubic(20, 0.6, 11)


def test_random_subcubic_degree_fraction():
    g = random_subcubic(60, 0.5, 4)
    assert abs(g.degree3_count() / g.n - 0.5) <= 0.15


@pytest.mark.parametrize("n, p3", [(0, 0.5), (5, 1.5), (5, -0.1)])
def test_random_subcubic_rejects_bad_arguments(n, p3):
    with pytest.raises(ValueError):
        random_subcubic(n, p3, 0)


def test_named_graphs():
    assert path_graph(4).m == 4
    assert cycle_graph(6).degree3_count() == 0
    assert complete_graph(4).m == 6
    assert nx.is_isomorphic(petersen_graph().to_networkx(), nx.petersen_graph())
    with pytest.raises(ValueError):
        cycle_graph(2)
