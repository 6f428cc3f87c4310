"""
Induced matching through maximum independent set on L(G^2)
Two edges of G are adjacent in the reduced graph when they share a node
or an edge of G joins them
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Optional, Set

import networkx as nx

from ..graphs.graph import Edge, EdgeSet, Graph, canonical_edge
from .base_solver import BaseSolver

logger = logging.getLogger(__name__)

Adjacency = Dict[int, Set[int]]


@dataclass(frozen=True)
class ReducedGraph:
    """L(G^2) on integer nodes 0..m-1 in canonical edge order"""
    graph: nx.Graph
    back_map: Dict[int, Edge] = field(default_factory=dict, compare=False)

    @property
    def max_degree(self) -> int:
        return max((d for _, d in self.graph.degree()), default=0)


def build_l_g2(g: Graph) -> ReducedGraph:
    edges = g.edges()
    index = {e: i for i, e in enumerate(edges)}
    reduced = nx.Graph()
    reduced.add_nodes_from(range(len(edges)))
    if edges:
        square = nx.power(nx.line_graph(g.to_networkx()), 2)
        for e, f in square.edges():
            reduced.add_edge(index[canonical_edge(*e)], index[canonical_edge(*f)])
    return ReducedGraph(graph=reduced, back_map=dict(enumerate(edges)))


def _remove(adj: Adjacency, dead: Set[int]):
    for v in dead:
        for w in adj.pop(v, ()):
            if w in adj:
                adj[w].discard(v)


def _components(adj: Adjacency):
    seen = set()
    for start in sorted(adj):
        if start in seen:
            continue
        comp, stack = {start}, [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        yield comp


def _cycle_mis(adj: Adjacency) -> Set[int]:
    start = min(adj)
    order, prev, cur = [start], None, start
    while True:
        nxt = [w for w in sorted(adj[cur]) if w != prev and w != start]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
        order.append(cur)
    return set(order[0:2 * (len(order) // 2):2])


class MISSearch:
    """Branch-and-bound maximum independent set with degree-0/1 reductions"""

    def __init__(self):
        self.explored = 0

    def solve(self, adj: Adjacency) -> FrozenSet[int]:
        self.explored += 1
        adj = {v: set(nbrs) for v, nbrs in adj.items()}
        chosen: Set[int] = set()

        reduced = True
        while reduced:
            reduced = False
            for v in sorted(adj):
                if v in adj and len(adj[v]) <= 1:
                    chosen.add(v)
                    _remove(adj, {v} | adj[v])
                    reduced = True
        if not adj:
            return frozenset(chosen)

        comps = list(_components(adj))
        if len(comps) > 1:
            for comp in comps:
                chosen |= self.solve({v: adj[v] & comp for v in comp})
            return frozenset(chosen)

        v = max(sorted(adj), key=lambda x: len(adj[x]))
        if len(adj[v]) <= 2:
            # minimum degree 2 after the reductions: a cycle
            return frozenset(chosen | _cycle_mis(adj))

        with_v = {x: set(n) for x, n in adj.items()}
        _remove(with_v, {v} | adj[v])
        taken = {v} | self.solve(with_v)

        without_v = {x: set(n) for x, n in adj.items()}
        _remove(without_v, {v})
        skipped = self.solve(without_v)

        return frozenset(chosen | (taken if len(taken) >= len(skipped) else skipped))


def mis_solve(rg: ReducedGraph, search: Optional[MISSearch] = None) -> FrozenSet[int]:
    """Maximum independent set of the reduced graph"""
    search = search or MISSearch()
    adj = {v: set(rg.graph.neighbors(v)) for v in rg.graph.nodes}
    return search.solve(adj)


def cameron_mim(g: Graph, search: Optional[MISSearch] = None) -> EdgeSet:
    rg = build_l_g2(g)
    chosen = mis_solve(rg, search)
    return frozenset(rg.back_map[i] for i in chosen)


class CameronSolver(BaseSolver):
    """Maximum induced matching via the L(G^2) reduction"""

    name = "baseline"

    def __init__(self, cache_enabled: bool = False):
        super().__init__(cache_enabled=cache_enabled)
        self.search = MISSearch()

    def solve(self, g: Graph) -> EdgeSet:
        self.search = MISSearch()
        result = cameron_mim(g, self.search)
        logger.debug(f"Baseline explored {self.search.explored} search nodes")
        return result
