"""
Recursion state of the solver and the rule outcomes applied to it
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Tuple

from ..graphs.graph import Edge, EdgeSet, Graph, canonical_edge


@dataclass(frozen=True)
class Alternative:
    """Delete `delete` from V and put `add_to_S` into the matching"""
    delete: FrozenSet[int]
    add_to_S: Tuple[Edge, ...] = ()

    def describe(self) -> str:
        added = ", ".join(f"{u}-{v}" for u, v in self.add_to_S) or "-"
        return f"add [{added}] delete {sorted(self.delete)}"


def select(g: Graph, u: int, w: int) -> Alternative:
    """Edge u-w goes into S; both endpoints and all their neighbours leave V"""
    return Alternative(
        delete=g.closed_neighbourhood(u) | g.closed_neighbourhood(w),
        add_to_S=(canonical_edge(u, w),),
    )


def drop(*nodes: int) -> Alternative:
    return Alternative(delete=frozenset(nodes))


@dataclass(frozen=True)
class RuleMatch:
    """A matched rule with its anchor and outcomes"""
    rule: str
    anchor: Tuple = ()
    alternatives: Tuple[Alternative, ...] = ()

    def describe(self) -> str:
        lines = [f"{self.rule} at {self.anchor}"]
        lines.extend(f"  [{i}] {alt.describe()}" for i, alt in enumerate(self.alternatives))
        return "\n".join(lines)


@dataclass(frozen=True)
class SolverState:
    """Current graph, chosen edges, live cut edges and node sides"""
    graph: Graph
    selected: EdgeSet = frozenset()
    B: EdgeSet = frozenset()
    side: Dict[int, int] = field(default_factory=dict, compare=False, hash=False)

    @classmethod
    def initial(cls, g: Graph) -> 'SolverState':
        return cls(graph=g)

    def apply(self, alt: Alternative) -> 'SolverState':
        graph = self.graph.remove_nodes(alt.delete)
        live = graph.nodes
        return SolverState(
            graph=graph,
            selected=self.selected | frozenset(alt.add_to_S),
            B=frozenset(e for e in self.B if e[0] in live and e[1] in live),
            side={v: s for v, s in self.side.items() if v in live},
        )

    def with_cut(self, side: Dict[int, int], B: Iterable[Edge]) -> 'SolverState':
        return SolverState(graph=self.graph, selected=self.selected, B=frozenset(B), side=dict(side))

    def restrict(self, nodes: Iterable[int]) -> 'SolverState':
        """Sub-state on a node subset, with an empty matching"""
        keep = frozenset(nodes)
        return SolverState(
            graph=self.graph.subgraph(keep),
            B=frozenset(e for e in self.B if e[0] in keep and e[1] in keep),
            side={v: s for v, s in self.side.items() if v in keep},
        )

    def sorted_B(self):
        return sorted(self.B)

    def key(self) -> Tuple:
        """Identity of the state for repeat detection along a search path"""
        return (self.graph.nodes, frozenset(self.graph.edges()), self.B)
