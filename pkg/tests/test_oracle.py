import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.graphs.generator import cycle_graph, path_graph, random_subcubic
from src.graphs.graph import Graph, disjoint_union, is_induced_matching
from src.rules.simplification import apply_S1
from src.solvers.oracle import BruteForceOracle, OracleGuardError, brute_force_mim


def test_triangle():
    assert brute_force_mim(cycle_graph(3)).size == 1


def test_path_witness(p5):
    found = brute_force_mim(p5)
    assert found.size == 2
    assert found.witness == [(1, 2), (4, 5)]
    assert found.explored > 0


def test_known_sizes(k4, petersen):
    assert brute_force_mim(k4).size == 1
    assert brute_force_mim(petersen).size == 3


def test_edgeless_graph():
    assert brute_force_mim(Graph({1: (), 2: ()})).size == 0


def test_guard(petersen):
    with pytest.raises(OracleGuardError):
        brute_force_mim(petersen, max_edges=5)


def test_oracle_solver_wrapper(petersen):
    oracle = BruteForceOracle()
    result, _ = oracle.run(petersen)
    assert len(result) == 3
    assert oracle.last.size == 3


@pytest.mark.parametrize("edges", range(1, 13))
def test_agrees_with_path_formula(edges):
    assert brute_force_mim(path_graph(edges)).size == len(apply_S1(path_graph(edges)))


@pytest.mark.parametrize("edges", range(3, 13))
def test_agrees_with_cycle_formula(edges):
    assert brute_force_mim(cycle_graph(edges)).size == edges // 3


@settings(max_examples=30, deadline=None)
@given(n=st.integers(2, 12), p3=st.floats(0.0, 1.0), seed=st.integers(0, 10_000), data=st.data())
def test_invariant_under_relabelling(n, p3, seed, data):
    g = random_subcubic(n, p3, seed)
    perm = data.draw(st.permutations(range(1, n + 1)))
    mapping = dict(zip(range(1, n + 1), perm))
    relabelled = Graph.from_edges(perm, [(mapping[u], mapping[v]) for u, v in g.edges()])
    found = brute_force_mim(g)
    assert is_induced_matching(g, found.witness)
    assert brute_force_mim(relabelled).size == found.size


@settings(max_examples=20, deadline=None)
@given(a=st.integers(0, 1000), b=st.integers(0, 1000))
def test_additive_over_disjoint_union(a, b):
    first = random_subcubic(7, 0.6, a)
    second = random_subcubic(6, 0.6, b)
    union = disjoint_union(first, second)
    assert brute_force_mim(union).size == brute_force_mim(first).size + brute_force_mim(second).size
