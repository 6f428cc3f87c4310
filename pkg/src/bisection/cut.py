"""
Bisection cut balanced on degree-3 nodes
Contract degree-2 chains, bisect the contracted multigraph with multi-start
Kernighan-Lin, move endpoints off crossing double edges, expand back
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import networkx as nx
import numpy as np

from ..config import config
from ..graphs.graph import EdgeSet, Graph, canonical_edge
from .contraction import BisectionError, ContractedGraph, contract_degree2

logger = logging.getLogger(__name__)

SideMap = Dict[int, int]


@dataclass(frozen=True)
class Cut:
    """Side assignment of every live node and the crossing edges"""
    side: Dict[int, int]
    B: EdgeSet
    k: int = 0
    degree3_per_side: Tuple[int, int] = (0, 0)
    contracted_cut_size: int = 0

    @property
    def size(self) -> int:
        return len(self.B)

    @property
    def quality(self) -> float:
        """|B| / k, compared against 1/6 + 0.1"""
        return len(self.B) / self.k if self.k else 0.0

    def side_nodes(self, which: int) -> List[int]:
        return sorted(v for v, s in self.side.items() if s == which)


def _cut_weight(g: nx.Graph, first: set) -> int:
    return sum(d['weight'] for u, v, d in g.edges(data=True) if (u in first) != (v in first))


def balanced_bisect(cg: ContractedGraph, seed: int = config.SEED,
                    starts: int = config.BISECTION_STARTS,
                    max_iter: int = config.KL_MAX_ITER) -> SideMap:
    """
    Split the degree-3 nodes into halves of size k//2 and k - k//2

    Every start draws a random balanced partition and improves it with
    Kernighan-Lin swaps; the lowest weight wins, ties go to the earliest start.
    """
    if cg.k < 2:
        raise BisectionError(f"Bisection needs k >= 2, got {cg.k}")

    g = cg.to_networkx()
    ordered = list(cg.nodes)
    half = cg.k // 2

    best: Optional[Tuple[int, set]] = None
    for start in range(starts):
        rng = np.random.default_rng([seed, start])
        perm = [ordered[i] for i in rng.permutation(cg.k)]
        initial = (set(perm[:half]), set(perm[half:]))
        first, _ = nx.community.kernighan_lin_bisection(
            g, partition=initial, max_iter=max_iter, weight='weight',
            seed=int(rng.integers(2 ** 31)),
        )
        weight = _cut_weight(g, first)
        logger.debug(f"Start {start}: contracted cut weight {weight}")
        if best is None or weight < best[0]:
            best = (weight, set(first))

    first = best[1]
    return {v: 1 if v in first else 2 for v in cg.nodes}


def repair_double_edges(cg: ContractedGraph, side: SideMap) -> SideMap:
    """Move one endpoint of every crossing double edge to the smaller side"""
    side = dict(side)
    moves = 0
    while True:
        crossing = [pair for pair in cg.double_edges() if side[pair[0]] != side[pair[1]]]
        if not crossing:
            return side
        if moves >= cg.k:
            raise BisectionError(f"Double-edge repair exceeded {cg.k} moves")

        u, v = crossing[0]
        sizes = {1: sum(1 for s in side.values() if s == 1), 2: sum(1 for s in side.values() if s == 2)}
        # the endpoint on the larger side moves; equal sides move the side-1 endpoint
        if sizes[1] >= sizes[2]:
            mover = u if side[u] == 1 else v
        else:
            mover = u if side[u] == 2 else v
        side[mover] = 3 - side[mover]
        moves += 1
        logger.debug(f"Moved {mover} off double edge {(u, v)}")


def expand_cut(g: Graph, cg: ContractedGraph, side: SideMap) -> Cut:
    """Lift a contracted side map to every node and pick one edge per crossing strand"""
    full: SideMap = dict(side)
    crossing = []

    for strand in cg.strands:
        a, b = strand.ends
        if side[a] == side[b]:
            for v in strand.interior:
                full[v] = side[a]
            continue
        path = strand.path if side[a] == 1 else tuple(reversed(strand.path))
        # middle edge, ties toward the side-1 end
        r = (len(path) - 2) // 2
        for i, v in enumerate(path):
            full[v] = 1 if i <= r else 2
        crossing.append(canonical_edge(path[r], path[r + 1]))

    for pendant in cg.pendants:
        for v in pendant.nodes:
            full[v] = side[pendant.anchor]

    counts = (
        sum(1 for v in cg.nodes if side[v] == 1),
        sum(1 for v in cg.nodes if side[v] == 2),
    )
    cut = Cut(
        side=full,
        B=frozenset(crossing),
        k=cg.k,
        degree3_per_side=counts,
        contracted_cut_size=cg.cut_size(side),
    )
    problems = cut_violations(g, cut)
    if problems:
        raise BisectionError("; ".join(problems))
    return cut


def cut_violations(g: Graph, cut: Cut) -> List[str]:
    """Edge-cut property and degree-3 balance of a cut over g"""
    problems = []
    missing = sorted(v for v in g.nodes if v not in cut.side)
    if missing:
        problems.append(f"Nodes without a side: {missing}")
        return problems
    for u, v in g.edges():
        crosses = cut.side[u] != cut.side[v]
        in_b = (u, v) in cut.B
        if crosses and not in_b:
            problems.append(f"Edge {(u, v)} crosses the cut but is not in B")
        elif in_b and not crosses:
            problems.append(f"Edge {(u, v)} is in B but does not cross")
    for e in cut.B:
        if not g.has_edge(*e):
            problems.append(f"B edge {e} is not an edge of the graph")

    k = g.degree3_count()
    for which in (1, 2):
        count = sum(1 for v in g.nodes_of_degree(3) if cut.side[v] == which)
        if abs(count - k / 2) > 1:
            problems.append(f"Side {which} holds {count} degree-3 nodes, k={k}")
    return problems


def compute_cut(g: Graph, seed: int = config.SEED, starts: int = config.BISECTION_STARTS) -> Cut:
    """Full bisection pipeline on a connected graph with at least 2 degree-3 nodes"""
    if not g.is_connected():
        raise BisectionError("Bisection needs a connected graph")

    cg = contract_degree2(g)
    side = balanced_bisect(cg, seed=seed, starts=starts)
    try:
        side = repair_double_edges(cg, side)
    except BisectionError as e:
        logger.warning(f"{e}; keeping the unrepaired split")
    cut = expand_cut(g, cg, side)

    if cut.k >= 30 and cut.quality > config.CUT_QUALITY_TARGET:
        logger.warning(f"Cut quality {cut.quality:.3f} above target {config.CUT_QUALITY_TARGET:.3f}")
    logger.info(f"Bisection: k={cut.k}, |B|={cut.size}, sides {cut.degree3_per_side}")
    return cut


def cut_from_sides(g: Graph, side: SideMap) -> Cut:
    """Cut implied by an explicit side map; B is every crossing edge"""
    missing = sorted(v for v in g.nodes if v not in side)
    if missing:
        raise ValueError(f"Nodes without a side: {missing}")
    bad = sorted(v for v, s in side.items() if s not in (1, 2))
    if bad:
        raise ValueError(f"Sides must be 1 or 2, got invalid entries for {bad}")
    cubic = g.nodes_of_degree(3)
    return Cut(
        side={v: side[v] for v in g.nodes},
        B=frozenset(e for e in g.edges() if side[e[0]] != side[e[1]]),
        k=len(cubic),
        degree3_per_side=(sum(1 for v in cubic if side[v] == 1), sum(1 for v in cubic if side[v] == 2)),
    )
