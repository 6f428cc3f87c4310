from abc import ABC, abstractmethod
from typing import Dict, Optional, Tuple
import time
import logging

from ..graphs.graph import EdgeSet, Graph, is_induced_matching

logger = logging.getLogger(__name__)


class BaseSolver(ABC):
    """Base class for all maximum induced matching solvers"""

    name = "base"

    def __init__(self, cache_enabled: bool = False):
        self.cache: Dict[Graph, EdgeSet] = {}
        self.cache_enabled = cache_enabled

    @abstractmethod
    def solve(self, g: Graph) -> EdgeSet:
        """Return a maximum induced matching of g"""
        pass

    def _get_from_cache(self, g: Graph) -> Optional[EdgeSet]:
        if not self.cache_enabled:
            return None
        if g in self.cache:
            logger.info(f"{self.name}: cache hit for {g!r}")
            return self.cache[g]
        return None

    def _save_to_cache(self, g: Graph, result: EdgeSet):
        if self.cache_enabled:
            self.cache[g] = result

    def solve_with_cache(self, g: Graph) -> EdgeSet:
        cached = self._get_from_cache(g)
        if cached is not None:
            return cached
        result = self.solve(g)
        self._save_to_cache(g, result)
        return result

    def run(self, g: Graph) -> Tuple[EdgeSet, float]:
        """Solve, time and check the result against g"""
        start = time.perf_counter()
        result = self.solve_with_cache(g)
        elapsed = time.perf_counter() - start

        if not is_induced_matching(g, result):
            raise RuntimeError(f"{self.name} returned an invalid induced matching")
        logger.info(f"{self.name}: size {len(result)} on {g!r} in {elapsed:.3f}s")
        return result, elapsed
