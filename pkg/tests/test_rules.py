import pytest

from src.bisection.cut import cut_from_sides
from src.graphs.generator import cycle_graph, path_graph
from src.graphs.graph import Graph, is_induced_matching
from src.rules.branching import (
    StuckStateError, match_B21, match_B22, match_B31, match_B32, match_B33, match_B41, match_branching,
)
from src.rules.simplification import (
    apply_S1, apply_S4, find_S3, find_simplification, solve_small_S2,
)
from src.rules.state import SolverState
from src.solvers.oracle import brute_force_mim


def _state(g: Graph, side_one) -> SolverState:
    side = {v: 1 if v in side_one else 2 for v in g.nodes}
    cut = cut_from_sides(g, side)
    return SolverState.initial(g).with_cut(cut.side, cut.B)


def _covers_optimum(state: SolverState, match) -> bool:
    best = max(len(alt.add_to_S) + brute_force_mim(state.graph.remove_nodes(alt.delete)).size
               for alt in match.alternatives)
    return best == brute_force_mim(state.graph).size


def _alternatives_are_legal(state: SolverState, match) -> bool:
    g = state.graph
    for alt in match.alternatives:
        for u, v in alt.add_to_S:
            if not (g.closed_neighbourhood(u) | g.closed_neighbourhood(v)) <= alt.delete:
                return False
        if not is_induced_matching(g, alt.add_to_S):
            return False
        if len(state.apply(alt).B) >= len(state.B):
            return False
    return True


# S1

def test_s1_single_edge():
    assert apply_S1(path_graph(1)) == frozenset({(1, 2)})


def test_s1_path_with_four_edges(p5):
    assert apply_S1(p5) == frozenset({(1, 2), (4, 5)})


def test_s1_cycle_of_six():
    assert len(apply_S1(cycle_graph(6))) == 2


def test_s1_isolated_node():
    assert apply_S1(Graph({7: ()})) == frozenset()


def test_s1_rejects_degree_three(k4):
    with pytest.raises(ValueError):
        apply_S1(k4)


@pytest.mark.parametrize("edges", range(1, 13))
def test_s1_paths_match_oracle(edges):
    g = path_graph(edges)
    chosen = apply_S1(g)
    assert is_induced_matching(g, chosen)
    assert len(chosen) == brute_force_mim(g).size


@pytest.mark.parametrize("edges", range(3, 13))
def test_s1_cycles_match_oracle(edges):
    g = cycle_graph(edges)
    chosen = apply_S1(g)
    assert is_induced_matching(g, chosen)
    assert len(chosen) == edges // 3 == brute_force_mim(g).size


# S2

def test_s2_small_components(k4, k33, petersen):
    assert len(solve_small_S2(k4, 12)) == 1
    assert len(solve_small_S2(k33, 12)) == 1
    chosen = solve_small_S2(petersen, 12)
    assert len(chosen) == 3
    assert is_induced_matching(petersen, chosen)


def test_s2_rejects_large_components(petersen):
    with pytest.raises(ValueError):
        solve_small_S2(petersen, 3)


# S3

def test_s3_chain():
    g = path_graph(3)
    match = find_S3(g)
    assert (match.d, match.D, match.C) == (2, frozenset({3}), frozenset({4}))
    assert match.chosen == ((3, 4),)
    assert match.removed == frozenset({2, 3, 4})


def test_s3_two_edges():
    edges = [(1, 2), (2, 3), (2, 4), (3, 6), (3, 5), (4, 5), (4, 7)]
    g = Graph.from_edges(range(1, 8), edges)
    match = find_S3(g)
    assert match.d == 2
    assert match.D == frozenset({3, 4})
    assert match.C == frozenset({5, 6, 7})
    assert match.chosen == ((3, 6), (4, 7))
    assert brute_force_mim(g).size == 2 + brute_force_mim(g.remove_nodes(match.removed)).size


@pytest.mark.parametrize("edges", range(3, 9))
def test_s3_never_fires_on_cycles(edges):
    assert find_S3(cycle_graph(edges)) is None


def test_s3_preserves_optimum(atlas_graphs):
    for g in atlas_graphs:
        match = find_S3(g)
        if match is None:
            continue
        assert is_induced_matching(g, match.chosen)
        rest = brute_force_mim(g.remove_nodes(match.removed)).size
        assert brute_force_mim(g).size == len(match.chosen) + rest


# S4

def test_s4_moves_leaf():
    g = path_graph(1)
    state = _state(g, {1})
    after = apply_S4(state)
    assert after.B == frozenset()
    assert after.side[1] == after.side[2]
    assert after.graph == g


def test_s4_not_applicable(p5):
    with pytest.raises(ValueError):
        apply_S4(_state(p5, {1, 2}))


def test_s4_handles_first_edge_only():
    g = Graph.from_edges(range(1, 5), [(1, 2), (3, 4)])
    state = _state(g, {1, 3})
    after = apply_S4(state)
    assert after.B == frozenset({(3, 4)})


def test_simplification_order(p5):
    state = _state(p5, {1, 2})
    match = find_simplification(state, kappa=12)
    assert match.rule == "S3"
    assert find_simplification(SolverState.initial(p5), kappa=12).rule == "S1"


# Branching

def test_b21():
    g = Graph.from_edges(range(1, 7), [(1, 2), (2, 3), (2, 4), (1, 5), (4, 6)])
    state = _state(g, {1, 5})
    match = match_branching(state)
    assert match.rule == "B2.1"
    assert match.anchor == (1, 2, 3)
    assert [alt.delete for alt in match.alternatives] == [frozenset({2, 3}), frozenset({1, 2, 3, 4})]
    assert match.alternatives[1].add_to_S == ((2, 3),)
    assert _alternatives_are_legal(state, match)
    assert _covers_optimum(state, match)


def test_b22():
    g = Graph.from_edges(range(1, 7), [(1, 2), (2, 3), (2, 4), (3, 4), (4, 5), (1, 6)])
    state = _state(g, {1, 6})
    match = match_branching(state)
    assert match.rule == "B2.2"
    assert match.anchor == (1, 2, 3, 4)
    assert match.alternatives[0].delete == frozenset({2})
    assert match.alternatives[1].delete == frozenset({1, 2, 3, 4})
    assert _alternatives_are_legal(state, match)
    assert _covers_optimum(state, match)


def test_b31():
    g = path_graph(5)
    state = _state(g, {1, 2, 3})
    match = match_branching(state)
    assert match.rule == "B3.1"
    assert len(match.alternatives) == 3
    assert match.alternatives[1].delete == frozenset({2, 3, 4, 5})
    assert match.alternatives[1].add_to_S == ((3, 4),)
    assert _alternatives_are_legal(state, match)
    assert _covers_optimum(state, match)


def test_b32():
    edges = [(1, 2), (2, 3), (3, 4), (3, 5), (4, 6), (5, 6), (1, 6)]
    g = Graph.from_edges(range(1, 7), edges)
    state = _state(g, {1, 2, 6})
    assert state.B == frozenset({(2, 3), (4, 6), (5, 6)})
    match = match_B32(state)
    assert match.rule == "B3.2"
    assert match.anchor == (1, 2, 3)
    assert [alt.add_to_S for alt in match.alternatives] == [((1, 2),), ((2, 3),), ()]
    assert match.alternatives[2].delete == frozenset({2})
    assert _alternatives_are_legal(state, match)
    assert _covers_optimum(state, match)


def test_b33(k4):
    state = _state(k4, {1, 3, 4})
    match = match_branching(state)
    assert match.rule == "B3.3"
    assert match.anchor == (1, 2)
    assert [alt.delete for alt in match.alternatives][1:] == [frozenset({1}), frozenset({2})]
    assert _covers_optimum(state, match)


def test_b41():
    edges = [(1, 2), (1, 3), (1, 4), (2, 5), (3, 6), (4, 7)]
    g = Graph.from_edges(range(1, 8), edges)
    state = SolverState.initial(g).with_cut({v: 1 if v in (1, 4, 7) else 2 for v in g.nodes},
                                            [(1, 2), (1, 3)])
    match = match_B41(state)
    assert match.rule == "B4.1"
    assert match.anchor == (1,)
    assert len(match.alternatives) == 4
    assert all(state.apply(alt).B == frozenset() for alt in match.alternatives)
    assert _covers_optimum(state, match)


def test_b41_degree_two_middle():
    g = path_graph(4)
    state = SolverState.initial(g).with_cut({1: 1, 2: 2, 3: 1, 4: 2, 5: 2}, [(1, 2), (2, 3), (3, 4)])
    match = match_B41(state)
    assert match.anchor == (2,)
    assert len(match.alternatives) == 3


def test_matchers_return_none_when_absent(p5):
    state = _state(p5, {1, 2})
    assert match_B21(state) is None
    assert match_B22(state) is None
    assert match_B33(state) is None
    assert match_B41(state) is None
    assert match_B31(state) is None


def test_stuck_state_raises():
    g = path_graph(1)
    with pytest.raises(StuckStateError):
        match_branching(_state(g, {1}))


def test_branching_needs_cut(p5):
    with pytest.raises(ValueError):
        match_branching(SolverState.initial(p5))


def test_matching_is_deterministic(k4):
    assert match_branching(_state(k4, {1, 3, 4})) == match_branching(_state(k4, {1, 3, 4}))
