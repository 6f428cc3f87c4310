"""
Solution and state validation
Checks solver outputs and intermediate states against the input graph
"""

import logging
from typing import Iterable, List, Tuple

from ..bisection.cut import Cut, cut_violations
from ..graphs.graph import Edge, Graph
from ..rules.state import SolverState

logger = logging.getLogger(__name__)


class SolutionValidator:
    """Validates matchings, cuts and recursion states"""

    @staticmethod
    def validate_solution(g: Graph, s: Iterable[Edge]) -> Tuple[bool, List[str]]:
        """Check that s is an induced matching of g"""
        errors = []
        s = list(s)
        endpoints = {}

        for u, v in s:
            if not g.has_edge(u, v):
                errors.append(f"({u}, {v}) is not an edge of the graph")
                continue
            for x, partner in ((u, v), (v, u)):
                if x in endpoints:
                    errors.append(f"Node {x} is covered twice")
                endpoints[x] = partner

        if not errors:
            for x, partner in endpoints.items():
                extra = sorted(w for w in g.neighbours(x) if w in endpoints and w != partner)
                if extra:
                    errors.append(f"Node {x} of ({min(x, partner)}, {max(x, partner)}) also touches {extra}")

        return len(errors) == 0, errors

    @staticmethod
    def validate_cut(g: Graph, cut: Cut) -> Tuple[bool, List[str]]:
        """Edge-cut property and degree-3 balance"""
        errors = cut_violations(g, cut)
        return len(errors) == 0, errors

    @staticmethod
    def validate_state(g_original: Graph, state: SolverState) -> Tuple[bool, List[str]]:
        """Invariants of a recursion state relative to the input graph"""
        errors = []
        g = state.graph

        for u, v in state.B:
            if not g.has_edge(u, v):
                errors.append(f"Cut edge ({u}, {v}) is not a live edge")

        _, matching_errors = SolutionValidator.validate_solution(g_original, state.selected)
        errors.extend(matching_errors)

        for u, v in state.selected:
            blocked = g_original.closed_neighbourhood(u) | g_original.closed_neighbourhood(v)
            alive = sorted(x for x in blocked if x in g)
            if alive:
                errors.append(f"Selected ({u}, {v}) leaves {alive} in the graph")

        if state.B:
            for u, v in g.edges():
                if u not in state.side or v not in state.side:
                    errors.append(f"Edge ({u}, {v}) has an endpoint without a side")
                    continue
                crosses = state.side[u] != state.side[v]
                if crosses != ((u, v) in state.B):
                    errors.append(f"Edge ({u}, {v}) disagrees with the cut")

        return len(errors) == 0, errors
