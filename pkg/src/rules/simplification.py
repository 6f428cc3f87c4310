"""
Simplification rules S1-S4
S1 and S2 solve whole components, S3 removes a self-contained neighbourhood,
S4 moves a degree-1 cut endpoint to the other side
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, List, Optional, Tuple

from ..graphs.graph import Edge, EdgeSet, Graph, is_induced_matching
from .state import Alternative, RuleMatch, SolverState, drop, select

logger = logging.getLogger(__name__)


def _walk(g: Graph, start: int, towards: Optional[int] = None) -> List[int]:
    order = [start]
    prev, cur = None, start
    if towards is not None:
        prev, cur = start, towards
        order.append(cur)
    while True:
        nxt = [w for w in sorted(g.neighbours(cur)) if w != prev and w != start]
        if not nxt:
            return order
        prev, cur = cur, nxt[0]
        order.append(cur)


def _s1_component(g: Graph, comp: FrozenSet[int]) -> List[Edge]:
    if len(comp) == 1:
        return []
    sub = g.subgraph(comp)
    ends = sub.nodes_of_degree(1)
    if ends:
        # path: picks at edge positions 0, 3, 6, ...
        order = _walk(sub, ends[0])
        edge_count = len(order) - 1
        return [(order[i], order[i + 1]) for i in range(0, edge_count, 3)]

    start = min(comp)
    order = _walk(sub, start, min(sub.neighbours(start)))
    edge_count = len(order)
    return [(order[i], order[i + 1]) for i in range(0, 3 * (edge_count // 3), 3)]


def apply_S1(component: Graph) -> EdgeSet:
    """Optimal induced matching of a graph whose components are paths, cycles or single nodes"""
    if component.max_degree() > 2:
        raise ValueError("S1 applies only to graphs without degree-3 nodes")
    result = []
    for comp in component.components():
        result.extend(_s1_component(component, frozenset(comp)))
    return frozenset(tuple(sorted(e)) for e in result)


def _s2_search(g: Graph) -> EdgeSet:
    total = set()
    for comp in g.components():
        sub = g.subgraph(comp)
        cubic = sub.nodes_of_degree(3)
        if not cubic:
            total |= apply_S1(sub)
            continue
        a = cubic[0]
        e = min(sub.neighbours(a), key=lambda x: (-sub.degree(x), x))
        # a-e into S, a removed alone, e removed alone
        best: Optional[EdgeSet] = None
        for alt in (select(sub, a, e), drop(a), drop(e)):
            found = frozenset(alt.add_to_S) | _s2_search(sub.remove_nodes(alt.delete))
            if best is None or len(found) > len(best):
                best = found
        total |= best
    return frozenset(total)


def solve_small_S2(component: Graph, kappa: int) -> EdgeSet:
    """Exact induced matching of a component with at most kappa degree-3 nodes"""
    k = component.degree3_count()
    if k > kappa:
        raise ValueError(f"S2 needs at most {kappa} degree-3 nodes, found {k}")
    return _s2_search(component)


@dataclass(frozen=True)
class S3Match:
    d: int
    D: FrozenSet[int]
    C: FrozenSet[int]
    chosen: Tuple[Edge, ...]

    @property
    def removed(self) -> FrozenSet[int]:
        return self.C | self.D | {self.d}


def _best_inside(g: Graph, nodes: FrozenSet[int]) -> Tuple[Edge, ...]:
    sub = g.subgraph(nodes)
    inside = sub.edges()
    for size in range(len(inside), 0, -1):
        for candidate in combinations(inside, size):
            if is_induced_matching(sub, candidate):
                return candidate
    return ()


def _s3_at(g: Graph, d: int, D: FrozenSet[int]) -> Optional[S3Match]:
    reach = frozenset().union(*(g.neighbours(x) for x in D))
    C = reach - D - {d}
    cd = C | D
    has_inside = False
    for x in cd:
        for y in g.neighbours(x):
            if y in cd:
                has_inside = True
            one_end_in_D = x in D or y in D
            other_ok = y in cd or y == d
            if not (one_end_in_D and other_ok):
                return None
    if not has_inside:
        return None
    return S3Match(d=d, D=D, C=C, chosen=_best_inside(g, cd))


def find_S3(g: Graph) -> Optional[S3Match]:
    """First node d and proper subset D of its neighbours whose neighbourhood is closed off"""
    for d in sorted(g.nodes):
        nbrs = sorted(g.neighbours(d))
        for size in range(1, len(nbrs)):
            for D in combinations(nbrs, size):
                match = _s3_at(g, d, frozenset(D))
                if match is not None:
                    return match
    return None


def find_S4(state: SolverState) -> Optional[Tuple[Edge, int]]:
    """First cut edge with a degree-1 endpoint, with that endpoint"""
    g = state.graph
    for u, v in state.sorted_B():
        for c in (u, v):
            if g.degree(c) == 1:
                return (u, v), c
    return None


def apply_S4(state: SolverState) -> SolverState:
    found = find_S4(state)
    if found is None:
        raise ValueError("S4 is not applicable: no cut edge has a degree-1 endpoint")
    edge, c = found
    other = edge[0] if edge[1] == c else edge[1]
    side = dict(state.side)
    side[c] = side[other]
    return state.with_cut(side, state.B - {edge})


def find_simplification(state: SolverState, kappa: int) -> Optional[RuleMatch]:
    """First applicable simplification in the order S1, S2, S3, S4"""
    g = state.graph
    touched = {v for e in state.B for v in e}
    free = [frozenset(c) for c in g.components() if not (c & touched)]

    for comp in free:
        sub = g.subgraph(comp)
        if sub.max_degree() <= 2:
            return RuleMatch("S1", (min(comp),), (Alternative(comp, tuple(sorted(apply_S1(sub)))),))
    for comp in free:
        sub = g.subgraph(comp)
        if sub.degree3_count() <= kappa:
            chosen = solve_small_S2(sub, kappa)
            return RuleMatch("S2", (min(comp),), (Alternative(comp, tuple(sorted(chosen))),))

    s3 = find_S3(g)
    if s3 is not None:
        logger.debug(f"S3 at d={s3.d}, D={sorted(s3.D)}, C={sorted(s3.C)}")
        return RuleMatch("S3", (s3.d, tuple(sorted(s3.D)), tuple(sorted(s3.C))),
                         (Alternative(s3.removed, s3.chosen),))

    s4 = find_S4(state)
    if s4 is not None:
        return RuleMatch("S4", s4)
    return None


def apply_simplification(state: SolverState, match: RuleMatch) -> SolverState:
    if match.rule == "S4":
        return apply_S4(state)
    return state.apply(match.alternatives[0])
