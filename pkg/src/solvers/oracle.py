"""
Exhaustive maximum induced matching, used as ground truth
"""

import logging
from typing import List, Optional

from ..config import config
from ..graphs.graph import Edge, EdgeSet, Graph, edge_conflicts
from ..models.results import OracleResult
from .base_solver import BaseSolver

logger = logging.getLogger(__name__)


class OracleGuardError(ValueError):
    """Instance too large for exhaustive search"""


def brute_force_mim(g: Graph, max_edges: Optional[int] = None) -> OracleResult:
    """
    Depth-first search over edge subsets

    An edge stays a candidate while it conflicts with no chosen edge;
    a branch is cut once it cannot beat the best set found so far.
    """
    limit = config.ORACLE_MAX_EDGES if max_edges is None else max_edges
    if g.m > limit:
        raise OracleGuardError(f"Oracle limited to {limit} edges, graph has {g.m}")

    best: List[Edge] = []
    explored = 0

    def dfs(candidates: List[Edge], chosen: List[Edge]):
        nonlocal best, explored
        explored += 1
        if len(chosen) > len(best):
            best = list(chosen)
        for i, e in enumerate(candidates):
            if len(chosen) + len(candidates) - i <= len(best):
                return
            rest = [f for f in candidates[i + 1:] if not edge_conflicts(g, e, f)]
            chosen.append(e)
            dfs(rest, chosen)
            chosen.pop()

    dfs(g.edges(), [])
    logger.debug(f"Oracle: size {len(best)} after {explored} search nodes")
    return OracleResult(size=len(best), witness=best, explored=explored)


class BruteForceOracle(BaseSolver):
    name = "oracle"

    def __init__(self, max_edges: Optional[int] = None, cache_enabled: bool = False):
        super().__init__(cache_enabled=cache_enabled)
        self.max_edges = max_edges
        self.last: Optional[OracleResult] = None

    def solve(self, g: Graph) -> EdgeSet:
        self.last = brute_force_mim(g, self.max_edges)
        return frozenset(tuple(e) for e in self.last.witness)
