"""
Measure-and-conquer weights and the branching factor root solver
"""

import logging
import math
from typing import Sequence, Union

from scipy.optimize import bisect

from ..graphs.graph import Graph
from ..models.results import Weighting

logger = logging.getLogger(__name__)

ROOT_ITERATIONS = 200
ROOT_XTOL = 1e-14


def _as_weighting(w: Union[Weighting, float]) -> Weighting:
    return w if isinstance(w, Weighting) else Weighting(s=w)


def node_weight(d: int, w: Union[Weighting, float]) -> float:
    """Weight of a node of degree d"""
    if d not in (0, 1, 2, 3):
        raise ValueError(f"Degree {d} outside 0..3")
    w = _as_weighting(w)
    if d == 3:
        return 1.0
    if d == 2:
        return w.s
    return 0.0


def graph_measure(g: Graph, w: Union[Weighting, float]) -> float:
    w = _as_weighting(w)
    return sum(node_weight(g.degree(v), w) for v in g.nodes)


def _check_vector(decrements: Sequence[float]):
    if len(decrements) < 2:
        raise ValueError("A branching vector needs at least two entries")
    if any(t <= 0 for t in decrements):
        raise ValueError(f"Branching vector entries must be positive: {list(decrements)}")


def tau(decrements: Sequence[float]) -> float:
    """Unique root x > 1 of sum(x ** -t) = 1"""
    _check_vector(decrements)
    r = len(decrements)
    t_min = min(decrements)

    def excess(x: float) -> float:
        return sum(x ** -t for t in decrements) - 1.0

    # excess(1) = r - 1 > 0 and excess(hi) <= 2 ** -t_min - 1 < 0
    hi = 2.0 * r ** (1.0 / t_min)
    root = bisect(excess, 1.0, hi, xtol=ROOT_XTOL, maxiter=ROOT_ITERATIONS)
    return float(root)


def upround(beta: float, places: int = 4) -> float:
    """Strict upward rounding at `places` decimals, tolerant of float noise"""
    scale = 10 ** places
    return math.ceil(beta * scale - 1e-9) / scale


def residual(decrements: Sequence[float], beta: float) -> float:
    return sum(beta ** -t for t in decrements) - 1.0
