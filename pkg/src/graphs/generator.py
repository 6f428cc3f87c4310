"""
Seeded generators for subcubic test instances
"""

import logging
from typing import Dict, List, Set

import networkx as nx
import numpy as np

from .graph import Graph

logger = logging.getLogger(__name__)

MAX_ATTEMPTS = 50
REPAIR_ROUNDS = 200


def _target_degrees(n: int, p3: float, rng: np.random.Generator) -> Dict[int, int]:
    n3 = int(round(p3 * n))
    if n3 % 2 == 1:
        n3 -= 1  # degree sum must be even
    cap = min(3, n - 1)
    chosen = set(int(v) for v in rng.choice(np.arange(1, n + 1), size=n3, replace=False)) if n3 else set()
    return {v: min(3 if v in chosen else 2, cap) for v in range(1, n + 1)}


def _spanning_tree(order: List[int], target: Dict[int, int], rng: np.random.Generator) -> Dict[int, Set[int]]:
    adj: Dict[int, Set[int]] = {v: set() for v in order}
    for i in range(1, len(order)):
        v = order[i]
        open_slots = [u for u in order[:i] if len(adj[u]) < target[u]]
        if not open_slots:
            return {}
        u = open_slots[int(rng.integers(len(open_slots)))]
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _fill(adj: Dict[int, Set[int]], target: Dict[int, int], rng: np.random.Generator):
    while True:
        deficit = sorted(v for v in adj if len(adj[v]) < target[v])
        pairs = [(u, v) for i, u in enumerate(deficit) for v in deficit[i + 1:] if v not in adj[u]]
        if not pairs:
            return
        u, v = pairs[int(rng.integers(len(pairs)))]
        adj[u].add(v)
        adj[v].add(u)


def _connected(adj: Dict[int, Set[int]]) -> bool:
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(adj)


def _switch(adj: Dict[int, Set[int]], u: int, v: int, x: int, y: int) -> bool:
    """Trade edge x-y for u-x and v-y; undone if it disconnects the graph"""
    if {x, y} & {u, v} or x in adj[u] or y in adj[v]:
        return False
    adj[x].discard(y)
    adj[y].discard(x)
    adj[u].add(x)
    adj[x].add(u)
    adj[v].add(y)
    adj[y].add(v)
    if _connected(adj):
        return True
    adj[u].discard(x)
    adj[x].discard(u)
    adj[v].discard(y)
    adj[y].discard(v)
    adj[x].add(y)
    adj[y].add(x)
    return False


def _repair(adj: Dict[int, Set[int]], target: Dict[int, int], rng: np.random.Generator):
    """Pair switching for deficit nodes left over by the greedy fill"""
    for _ in range(REPAIR_ROUNDS):
        deficit = sorted(v for v in adj if len(adj[v]) < target[v])
        slots = [v for v in deficit for _ in range(target[v] - len(adj[v]))]
        if len(slots) < 2:
            return
        u, v = slots[0], slots[1]
        edges = sorted((x, y) for x in adj for y in adj[x] if x < y)
        order = rng.permutation(len(edges))
        if not any(_switch(adj, u, v, x, y) or _switch(adj, u, v, y, x)
                   for x, y in (edges[int(i)] for i in order)):
            return


def random_subcubic(n: int, p3: float, seed: int) -> Graph:
    """Connected simple graph on ids 1..n, max degree 3, about p3*n nodes of degree 3"""
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 <= p3 <= 1.0:
        raise ValueError("p3 must lie in [0, 1]")
    if n == 1:
        return Graph({1: ()})

    rng = np.random.default_rng(seed)
    for attempt in range(MAX_ATTEMPTS):
        target = _target_degrees(n, p3, rng)
        order = [int(v) for v in rng.permutation(np.arange(1, n + 1))]
        adj = _spanning_tree(order, target, rng)
        if not adj:
            continue
        _fill(adj, target, rng)
        _repair(adj, target, rng)
        if not _connected(adj):
            continue
        graph = Graph(adj)
        achieved = graph.degree3_count() / n
        if n >= 20 and abs(achieved - p3) > 0.15:
            logger.warning(f"Degree-3 fraction {achieved:.2f} misses target {p3:.2f} (n={n}, seed={seed})")
        logger.debug(f"Generated n={n} m={graph.m} after {attempt + 1} attempt(s)")
        return graph
    raise RuntimeError(f"Could not generate a connected subcubic graph (n={n}, p3={p3}, seed={seed})")


def path_graph(num_edges: int) -> Graph:
    """Path with `num_edges` edges on ids 1..num_edges+1"""
    return Graph.from_edges(range(1, num_edges + 2), [(i, i + 1) for i in range(1, num_edges + 1)])


def cycle_graph(num_edges: int) -> Graph:
    if num_edges < 3:
        raise ValueError("a simple cycle needs at least 3 edges")
    edges = [(i, i + 1) for i in range(1, num_edges)] + [(1, num_edges)]
    return Graph.from_edges(range(1, num_edges + 1), edges)


def relabel_from_one(g: nx.Graph) -> Graph:
    """Convert a networkx graph to ids 1..n in sorted node order"""
    mapping = {v: i for i, v in enumerate(sorted(g.nodes()), 1)}
    return Graph.from_networkx(nx.relabel_nodes(g, mapping))


def petersen_graph() -> Graph:
    return relabel_from_one(nx.petersen_graph())


def complete_graph(n: int) -> Graph:
    return relabel_from_one(nx.complete_graph(n))
