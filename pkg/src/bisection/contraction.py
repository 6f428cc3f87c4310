"""
Contraction of degree-2 chains onto the degree-3 nodes of a graph
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import networkx as nx

from ..graphs.graph import Edge, Graph, canonical_edge

logger = logging.getLogger(__name__)


class BisectionError(RuntimeError):
    """Raised when a cut cannot be built or fails its contract"""


@dataclass(frozen=True)
class Strand:
    """Chain of degree-2 nodes joining two distinct degree-3 nodes"""
    path: Tuple[int, ...]

    @property
    def ends(self) -> Tuple[int, int]:
        return self.path[0], self.path[-1]

    @property
    def key(self) -> Edge:
        return canonical_edge(*self.ends)

    @property
    def interior(self) -> Tuple[int, ...]:
        return self.path[1:-1]

    def edges(self) -> List[Edge]:
        return [canonical_edge(a, b) for a, b in zip(self.path, self.path[1:])]


@dataclass(frozen=True)
class Pendant:
    """Dangling chain or loop attached to a single degree-3 node"""
    anchor: int
    nodes: Tuple[int, ...]
    loop: bool = False


@dataclass(frozen=True)
class ContractedGraph:
    """Multigraph on the degree-3 nodes; each strand is one parallel edge"""
    nodes: Tuple[int, ...]
    strands: Tuple[Strand, ...]
    pendants: Tuple[Pendant, ...] = ()
    multiplicity: Dict[Edge, int] = field(default_factory=dict, compare=False)

    @property
    def k(self) -> int:
        return len(self.nodes)

    def double_edges(self) -> List[Edge]:
        return sorted(pair for pair, mult in self.multiplicity.items() if mult == 2)

    def cut_size(self, side: Dict[int, int]) -> int:
        return sum(mult for (u, v), mult in self.multiplicity.items() if side[u] != side[v])

    def to_networkx(self) -> nx.Graph:
        """Weighted simple graph, weight = multiplicity"""
        g = nx.Graph()
        g.add_nodes_from(self.nodes)
        for (u, v), mult in sorted(self.multiplicity.items()):
            g.add_edge(u, v, weight=mult)
        return g


def contract_degree2(g: Graph) -> ContractedGraph:
    """Walk every chain leaving a degree-3 node and classify it"""
    anchors = g.nodes_of_degree(3)
    if len(anchors) < 2:
        raise BisectionError(f"Contraction needs at least 2 degree-3 nodes, found {len(anchors)}")

    visited = set()
    strands: List[Strand] = []
    pendants: List[Pendant] = []
    for a in anchors:
        for first in sorted(g.neighbours(a)):
            if canonical_edge(a, first) in visited:
                continue
            visited.add(canonical_edge(a, first))
            path = [a]
            prev, cur = a, first
            while g.degree(cur) == 2:
                path.append(cur)
                nxt = next(w for w in g.neighbours(cur) if w != prev)
                visited.add(canonical_edge(cur, nxt))
                prev, cur = cur, nxt
            path.append(cur)

            if g.degree(cur) == 3 and cur != a:
                strands.append(Strand(tuple(path)))
            elif cur == a:
                pendants.append(Pendant(anchor=a, nodes=tuple(path[1:-1]), loop=True))
            else:
                pendants.append(Pendant(anchor=a, nodes=tuple(path[1:])))

    multiplicity = Counter(s.key for s in strands)
    for pair, mult in multiplicity.items():
        if mult > 2:
            raise BisectionError(f"Strand multiplicity {mult} between {pair}: theta graph")

    contracted = ContractedGraph(
        nodes=tuple(anchors),
        strands=tuple(strands),
        pendants=tuple(pendants),
        multiplicity=dict(multiplicity),
    )
    _flag_neighbouring_doubles(contracted)
    logger.debug(f"Contracted to k={contracted.k} with {len(strands)} strands, "
                 f"{len(contracted.double_edges())} double edges")
    return contracted


def _flag_neighbouring_doubles(cg: ContractedGraph):
    doubles = cg.double_edges()
    touched = Counter(v for pair in doubles for v in pair)
    shared = [v for v, count in touched.items() if count > 1]
    if shared:
        logger.warning(f"Neighbouring double edges at {sorted(shared)}")
