"""
Exact maximum induced matching on subcubic graphs
Depth-first recursion: terminate, split components, bisect, simplify, branch
"""

import logging
import time
from typing import Optional, Set, Tuple

from ..bisection.cut import compute_cut
from ..config import config
from ..graphs.graph import EdgeSet, Graph, is_induced_matching
from ..measure.tau import graph_measure
from ..models.results import SolverConfig, SolveStats
from ..rules.branching import StuckStateError, match_branching
from ..rules.simplification import apply_simplification, find_simplification
from ..rules.state import SolverState
from .base_solver import BaseSolver
from .validator import SolutionValidator

logger = logging.getLogger(__name__)


def verify_solution(g_original: Graph, s: EdgeSet) -> bool:
    return is_induced_matching(g_original, s)


class AlgoMIMSolver(BaseSolver):
    """Branch-and-reduce solver driven by a balanced bisection cut"""

    name = "algo_mim"

    def __init__(self, cfg: Optional[SolverConfig] = None, cache_enabled: bool = False):
        super().__init__(cache_enabled=cache_enabled)
        self.cfg = cfg or SolverConfig()
        self.stats = SolveStats()
        self._root: Optional[Graph] = None

    def solve(self, g: Graph) -> EdgeSet:
        self.stats = SolveStats()
        self.stats.measure = graph_measure(g, self.cfg.s)
        self.stats.measure_bound = config.GROWTH_BASE ** self.stats.measure
        self._root = g

        start = time.perf_counter()
        result = self._recurse(SolverState.initial(g), depth=0, path=set())
        self.stats.elapsed = time.perf_counter() - start

        if self.cfg.assertion_level >= 1:
            ok, errors = SolutionValidator.validate_solution(g, result)
            if not ok:
                raise RuntimeError(f"Invalid induced matching: {errors}")
        logger.info(f"Solved n={g.n}, m={g.m}: size {len(result)}, "
                    f"{self.stats.leaves} leaves, {self.stats.bisections} bisections")
        return result

    def _check(self, state: SolverState, path: Set):
        ok, errors = SolutionValidator.validate_state(self._root, state)
        if not ok:
            raise RuntimeError(f"State invariant broken: {errors}")
        key = state.key()
        if key in path:
            raise RuntimeError("State repeated along a search path")
        path.add(key)

    def _recurse(self, state: SolverState, depth: int, path: Set) -> EdgeSet:
        stats = self.stats
        stats.nodes_expanded += 1
        stats.max_depth = max(stats.max_depth, depth)
        if self.cfg.assertion_level >= 2:
            path = set(path)
            self._check(state, path)

        g = state.graph
        if g.n == 0:
            stats.leaves += 1
            return state.selected

        if not state.B:
            components = g.components()
            if len(components) > 1:
                stats.count("split")
                result = set(state.selected)
                for comp in components:
                    result |= self._recurse(state.restrict(comp), depth + 1, path)
                return frozenset(result)

            if g.degree3_count() > self.cfg.kappa:
                cut = compute_cut(g, seed=self.cfg.seed + stats.bisections, starts=self.cfg.bisection_starts)
                if self.cfg.assertion_level >= 2:
                    ok, errors = SolutionValidator.validate_cut(g, cut)
                    if not ok:
                        raise RuntimeError(f"Invalid bisection cut: {errors}")
                stats.bisections += 1
                stats.cut_sizes.append(cut.size)
                stats.count("bisect")
                return self._recurse(state.with_cut(cut.side, cut.B), depth + 1, path)

        match = find_simplification(state, self.cfg.kappa)
        if match is not None:
            stats.count(match.rule)
            return self._recurse(apply_simplification(state, match), depth + 1, path)

        if not state.B:
            raise StuckStateError(f"No case applies to a state with n={g.n} and an empty cut")

        match = match_branching(state)
        stats.count(match.rule)
        best: Optional[EdgeSet] = None
        for alt in match.alternatives:
            found = self._recurse(state.apply(alt), depth + 1, path)
            if best is None or len(found) > len(best):
                best = found
        return best


def algo_mim(g: Graph, cfg: Optional[SolverConfig] = None) -> Tuple[EdgeSet, SolveStats]:
    """Maximum induced matching of g with the search statistics"""
    solver = AlgoMIMSolver(cfg)
    result = solver.solve(g)
    return result, solver.stats
