import logging

import numpy as np
import pytest

from src.bisection.contraction import BisectionError, contract_degree2
from src.bisection.cut import (
    balanced_bisect, compute_cut, cut_from_sides, cut_violations, expand_cut, repair_double_edges,
)
from src.config import config
from src.graphs.generator import path_graph, random_subcubic
from src.graphs.graph import Graph

logger = logging.getLogger(__name__)


@pytest.fixture
def chain_graph() -> Graph:
    """Triangle loops at 1 and 4, joined by the chain 1-7-8-4"""
    edges = [(1, 2), (2, 3), (1, 3), (1, 7), (7, 8), (8, 4), (4, 5), (5, 6), (4, 6)]
    return Graph.from_edges([1, 2, 3, 4, 5, 6, 7, 8], edges)


def test_contract_double_edge_graph(double_edge_graph):
    cg = contract_degree2(double_edge_graph)
    assert cg.nodes == (1, 2, 3, 4)
    assert cg.multiplicity == {(1, 2): 1, (2, 3): 2, (3, 4): 1}
    assert cg.double_edges() == [(2, 3)]
    assert sorted(p.anchor for p in cg.pendants) == [1, 4]
    assert all(p.loop and len(p.nodes) == 5 for p in cg.pendants)


def test_strands_partition_degree2_nodes(double_edge_graph):
    cg = contract_degree2(double_edge_graph)
    interior = [v for s in cg.strands for v in s.interior] + [v for p in cg.pendants for v in p.nodes]
    assert sorted(interior) == double_edge_graph.nodes_of_degree(2)
    strand_edges = [e for s in cg.strands for e in s.edges()]
    assert len(strand_edges) == len(set(strand_edges))


def test_contract_k4(k4):
    cg = contract_degree2(k4)
    assert cg.k == 4
    assert len(cg.strands) == 6
    assert set(cg.multiplicity.values()) == {1}
    assert cg.pendants == ()


def test_contract_needs_two_degree3_nodes():
    with pytest.raises(BisectionError):
        contract_degree2(path_graph(5))


def test_contract_rejects_theta_graph():
    theta = Graph.from_edges(range(1, 6), [(1, 3), (3, 2), (1, 4), (4, 2), (1, 5), (5, 2)])
    with pytest.raises(BisectionError):
        contract_degree2(theta)


def test_dangling_chain_is_a_pendant():
    g = Graph.from_edges(range(1, 7), [(1, 2), (1, 3), (2, 3), (1, 4), (2, 5), (5, 6)])
    # degree-3 nodes 1 and 2; 4 hangs off 1, 5-6 hangs off 2
    cg = contract_degree2(g)
    dangling = {p.anchor: p.nodes for p in cg.pendants}
    assert dangling == {1: (4,), 2: (5, 6)}


def test_balanced_bisect_double_edge_graph(double_edge_graph):
    cg = contract_degree2(double_edge_graph)
    side = balanced_bisect(cg, seed=1)
    assert sorted(side.values()) == [1, 1, 2, 2]
    assert cg.cut_size(side) == 2


def test_balanced_bisect_k4(k4):
    cg = contract_degree2(k4)
    side = balanced_bisect(cg, seed=3)
    assert sorted(side.values()) == [1, 1, 2, 2]
    assert cg.cut_size(side) == 4


def test_balanced_bisect_is_deterministic(petersen):
    cg = contract_degree2(petersen)
    assert balanced_bisect(cg, seed=5) == balanced_bisect(cg, seed=5)


@pytest.mark.parametrize("seed", [2, 7])
def test_balanced_bisect_repeats_on_larger_graph(seed):
    cg = contract_degree2(random_subcubic(40, 0.75, 11))
    runs = [balanced_bisect(cg, seed=seed) for _ in range(10)]
    assert all(run == runs[0] for run in runs)
    cuts = [compute_cut(random_subcubic(12, 0.75, 11), seed=seed).B for _ in range(10)]
    assert len(set(cuts)) == 1


def test_repair_moves_endpoint_off_double_edge(double_edge_graph):
    cg = contract_degree2(double_edge_graph)
    repaired = repair_double_edges(cg, {1: 1, 2: 1, 3: 2, 4: 2})
    assert repaired[2] == repaired[3]
    assert sorted(repaired.values()).count(1) in (1, 3)
    assert cg.cut_size(repaired) == 1


def test_repair_fixpoint(k4):
    cg = contract_degree2(k4)
    side = {1: 1, 2: 1, 3: 2, 4: 2}
    assert repair_double_edges(cg, side) == side


def test_expand_picks_middle_edge(chain_graph):
    cg = contract_degree2(chain_graph)
    cut = expand_cut(chain_graph, cg, {1: 1, 4: 2})
    assert cut.B == frozenset({(7, 8)})
    assert [cut.side[v] for v in (1, 7, 8, 4)] == [1, 1, 2, 2]
    assert cut.side[2] == cut.side[3] == 1
    assert cut.side[5] == cut.side[6] == 2


def test_expand_single_edge_strand(double_edge_graph):
    cg = contract_degree2(double_edge_graph)
    side = {1: 1, 2: 2, 3: 2, 4: 2}
    cut = expand_cut(double_edge_graph, cg, side)
    assert cut.B == frozenset({(1, 2)})
    assert cut.contracted_cut_size == 1


def test_compute_cut_contract(double_edge_graph):
    cut = compute_cut(double_edge_graph, seed=1)
    assert cut_violations(double_edge_graph, cut) == []
    assert all(abs(c - 2) <= 1 for c in cut.degree3_per_side)
    assert cut.size == cut.contracted_cut_size
    assert cut.size in (1, 2)


def test_compute_cut_rejects_disconnected(k4):
    from src.graphs.graph import disjoint_union
    with pytest.raises(BisectionError):
        compute_cut(disjoint_union(k4, k4))


def test_cut_from_sides(p5):
    cut = cut_from_sides(p5, {1: 1, 2: 1, 3: 2, 4: 2, 5: 2})
    assert cut.B == frozenset({(2, 3)})
    with pytest.raises(ValueError):
        cut_from_sides(p5, {1: 1})


def _bisection_sweep(count: int):
    ratios = []
    for seed in range(count):
        g = random_subcubic(40 + seed % 21, 0.9, seed)
        if g.degree3_count() < 30:
            continue
        cut = compute_cut(g, seed=seed)
        assert cut_violations(g, cut) == []
        k = g.degree3_count()
        assert all(abs(c - k / 2) <= 1 for c in cut.degree3_per_side)
        ratios.append(cut.quality)
    return ratios


def test_bisection_contract_on_random_graphs():
    assert _bisection_sweep(10)


@pytest.mark.slow
def test_bisection_contract_on_hundred_graphs():
    ratios = _bisection_sweep(100)
    assert len(ratios) >= 80
    within = np.mean([r <= config.CUT_QUALITY_TARGET for r in ratios])
    logger.warning(f"Mean |B|/k {np.mean(ratios):.3f} over {len(ratios)} graphs, "
                   f"{within:.0%} at or under {config.CUT_QUALITY_TARGET:.3f}")
