"""
Branching rules on cut edges
Each matcher scans B in canonical order, tries both orientations of an edge
and returns the rule's alternatives or None
"""

import logging
from typing import Callable, List, Optional, Tuple

from .state import RuleMatch, SolverState, drop, select

logger = logging.getLogger(__name__)


class StuckStateError(RuntimeError):
    """No dispatch case applies to a non-empty state"""


def _oriented(state: SolverState) -> List[Tuple[int, int]]:
    pairs = []
    for u, v in state.sorted_B():
        pairs.append((u, v))
        pairs.append((v, u))
    return pairs


def match_B21(state: SolverState) -> Optional[RuleMatch]:
    """d -|- a where a has degree 3 and a leaf neighbour c on its own side"""
    g = state.graph
    for d, a in _oriented(state):
        if g.degree(a) != 3:
            continue
        for c in sorted(g.neighbours(a) - {d}):
            if g.degree(c) == 1 and (min(a, c), max(a, c)) not in state.B:
                return RuleMatch("B2.1", (d, a, c), (drop(a, c), select(g, a, c)))
    return None


def match_B22(state: SolverState) -> Optional[RuleMatch]:
    """d -|- a, a of degree 3 with neighbours b and d' where b has degree 2 and b-d' is an edge"""
    g = state.graph
    for d, a in _oriented(state):
        if g.degree(a) != 3:
            continue
        others = sorted(g.neighbours(a) - {d})
        for b, d2 in (others, others[::-1]):
            if g.degree(b) == 2 and g.has_edge(b, d2):
                return RuleMatch("B2.2", (d, a, b, d2), (drop(a), select(g, a, b)))
    return None


def match_B31(state: SolverState) -> Optional[RuleMatch]:
    """d - b -|- b' - d' with b and b' of degree 2"""
    g = state.graph
    for b, b2 in state.sorted_B():
        if g.degree(b) != 2 or g.degree(b2) != 2:
            continue
        (d,) = g.neighbours(b) - {b2}
        (d2,) = g.neighbours(b2) - {b}
        if g.degree(d) < 2 or g.degree(d2) < 2:
            continue
        alternatives = (select(g, d, b), select(g, b, b2), select(g, b2, d2))
        return RuleMatch("B3.1", (d, b, b2, d2), alternatives)
    return None


def match_B32(state: SolverState) -> Optional[RuleMatch]:
    """d - b -|- a with b of degree 2, a of degree 3 and no leaf around a"""
    g = state.graph
    for b, a in _oriented(state):
        if g.degree(b) != 2 or g.degree(a) != 3:
            continue
        if any(g.degree(x) < 2 for x in g.neighbours(a)):
            continue
        (d,) = g.neighbours(b) - {a}
        return RuleMatch("B3.2", (d, b, a), (select(g, d, b), select(g, b, a), drop(b)))
    return None


def match_B33(state: SolverState) -> Optional[RuleMatch]:
    """a' -|- a, both of degree 3, no leaf around either"""
    g = state.graph
    for a2, a in state.sorted_B():
        if g.degree(a2) != 3 or g.degree(a) != 3:
            continue
        around = (g.neighbours(a) | g.neighbours(a2)) - {a, a2}
        if any(g.degree(x) < 2 for x in around):
            continue
        return RuleMatch("B3.3", (a2, a), (select(g, a2, a), drop(a2), drop(a)))
    return None


def match_B41(state: SolverState) -> Optional[RuleMatch]:
    """A node carrying two or more cut edges: remove it, or match it with one of its neighbours"""
    g = state.graph
    load = {}
    for u, v in state.sorted_B():
        load[u] = load.get(u, 0) + 1
        load[v] = load.get(v, 0) + 1
    for mid in sorted(load):
        if load[mid] < 2:
            continue
        alternatives = (drop(mid),) + tuple(select(g, mid, x) for x in sorted(g.neighbours(mid)))
        return RuleMatch("B4.1", (mid,), alternatives)
    return None


BRANCHING_ORDER: List[Tuple[str, Callable[[SolverState], Optional[RuleMatch]]]] = [
    ("B2.1", match_B21),
    ("B2.2", match_B22),
    ("B3.1", match_B31),
    ("B3.2", match_B32),
    ("B3.3", match_B33),
    ("B4.1", match_B41),
]


def match_branching(state: SolverState) -> RuleMatch:
    """First branching rule that applies, in fixed precedence"""
    if not state.B:
        raise ValueError("Branching needs a non-empty cut")
    for _, matcher in BRANCHING_ORDER:
        match = matcher(state)
        if match is not None:
            logger.debug(f"{match.rule} at {match.anchor}")
            return match
    raise StuckStateError(
        f"No branching rule applies: n={state.graph.n}, B={state.sorted_B()}"
    )
