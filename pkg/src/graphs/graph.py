"""
Subcubic graph value type
Node ids are stable integers; removing nodes returns a new graph
"""

import logging
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Set, Tuple

import networkx as nx

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]
EdgeSet = FrozenSet[Edge]

MAX_DEGREE = 3


def canonical_edge(u: int, v: int) -> Edge:
    """Order an edge with the smaller id first"""
    if u == v:
        raise ValueError(f"Self-loop on node {u}")
    return (u, v) if u < v else (v, u)


def sorted_edges(edges: Iterable[Edge]) -> List[Edge]:
    return sorted(canonical_edge(u, v) for u, v in edges)


class Graph:
    """Simple undirected graph of maximum degree 3"""

    __slots__ = ('_adj', '_m')

    def __init__(self, adjacency: Mapping[int, Iterable[int]]):
        self._adj: Dict[int, FrozenSet[int]] = {v: frozenset(nbrs) for v, nbrs in adjacency.items()}
        self._m = sum(len(nbrs) for nbrs in self._adj.values()) // 2

    @classmethod
    def from_edges(cls, nodes: Iterable[int], edges: Iterable[Edge]) -> 'Graph':
        """Build a graph, rejecting loops, parallel edges and degree overflow"""
        adj: Dict[int, Set[int]] = {v: set() for v in nodes}
        for u, v in edges:
            if u == v:
                raise ValueError(f"Self-loop on node {u}")
            adj.setdefault(u, set())
            adj.setdefault(v, set())
            if v in adj[u]:
                raise ValueError(f"Duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
            for x in (u, v):
                if len(adj[x]) > MAX_DEGREE:
                    raise ValueError(f"Node {x} exceeds degree {MAX_DEGREE}")
        return cls(adj)

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> 'Graph':
        return cls.from_edges(g.nodes(), g.edges())

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(sorted(self._adj))
        g.add_edges_from(self.edges())
        return g

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    @property
    def nodes(self) -> FrozenSet[int]:
        return frozenset(self._adj)

    def __len__(self) -> int:
        return len(self._adj)

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(frozenset(self.edges())) ^ hash(self.nodes)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def _check(self, v: int):
        if v not in self._adj:
            raise ValueError(f"Unknown node id {v}")

    def neighbours(self, v: int) -> FrozenSet[int]:
        self._check(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._adj[v])

    def closed_neighbourhood(self, v: int) -> FrozenSet[int]:
        return self.neighbours(v) | {v}

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def edges(self) -> List[Edge]:
        """Edges in canonical order"""
        return sorted((u, v) for u, nbrs in self._adj.items() for v in nbrs if u < v)

    def nodes_of_degree(self, d: int) -> List[int]:
        return sorted(v for v, nbrs in self._adj.items() if len(nbrs) == d)

    def degree3_count(self) -> int:
        return sum(1 for nbrs in self._adj.values() if len(nbrs) == 3)

    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self._adj.values()), default=0)

    def remove_nodes(self, dead: Iterable[int]) -> 'Graph':
        """Return the graph without `dead` and their incident edges"""
        dead = frozenset(dead)
        for v in dead:
            self._check(v)
        if not dead:
            return self
        return Graph({v: nbrs - dead for v, nbrs in self._adj.items() if v not in dead})

    def subgraph(self, keep: Iterable[int]) -> 'Graph':
        keep = frozenset(keep)
        for v in keep:
            self._check(v)
        return Graph({v: self._adj[v] & keep for v in keep})

    def components(self) -> List[Set[int]]:
        """Connected components ordered by their smallest id"""
        seen: Set[int] = set()
        result = []
        for start in sorted(self._adj):
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                v = stack.pop()
                for w in self._adj[v]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            result.append(comp)
        return result

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


def is_induced_matching(g_original: Graph, s: Iterable[Edge]) -> bool:
    """True iff every endpoint of `s` has exactly one neighbour among the endpoints"""
    endpoints: Dict[int, int] = {}
    for u, v in s:
        if u == v or not g_original.has_edge(u, v):
            return False
        for x, partner in ((u, v), (v, u)):
            if x in endpoints:
                return False
            endpoints[x] = partner
    for x in endpoints:
        if sum(1 for w in g_original.neighbours(x) if w in endpoints) != 1:
            return False
    return True


def edge_conflicts(g: Graph, e: Edge, f: Edge) -> bool:
    """True if `e` and `f` cannot both be in an induced matching of g"""
    reach = g.closed_neighbourhood(e[0]) | g.closed_neighbourhood(e[1])
    return f[0] in reach or f[1] in reach


def disjoint_union(first: Graph, second: Graph, offset: Optional[int] = None) -> Graph:
    """Place `second` next to `first`, shifting its ids by `offset`"""
    if offset is None:
        offset = max(first.nodes, default=0)
    nodes = list(first.nodes) + [v + offset for v in second.nodes]
    edges = first.edges() + [(u + offset, v + offset) for u, v in second.edges()]
    return Graph.from_edges(nodes, edges)
