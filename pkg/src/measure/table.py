"""
Runtime table of the branching rules and the scan for the best weight s
"""

import logging
import math
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from ..knowledge.branching_vectors import BranchingKnowledgeBase, BranchingVector
from ..models.results import TableRow, Weighting
from .tau import tau, upround

logger = logging.getLogger(__name__)

DEFAULT_S_VALUES = BranchingKnowledgeBase.PRINTED_S
MISMATCH_TOLERANCE = 5e-5


def _s_of(w) -> float:
    return w.s if isinstance(w, Weighting) else float(w)


def _evaluate(vector: BranchingVector, s_values: Sequence[float], row_index: int = -1) -> TableRow:
    row = TableRow(rule=vector.rule, family=vector.family, formula=vector.formula)
    for s in s_values:
        beta = tau(vector.evaluate(s))
        row.raw[s] = beta
        row.values[s] = upround(beta)
        printed = BranchingKnowledgeBase.printed_value(row_index, s) if row_index >= 0 else None
        row.printed[s] = printed
        if printed is not None and abs(printed - row.values[s]) > MISMATCH_TOLERANCE:
            row.mismatches.append(s)
    return row


def theorem_table(s_values: Iterable = DEFAULT_S_VALUES) -> List[TableRow]:
    """The ten rule rows evaluated at every s, followed by the overall-max row"""
    s_values = [_s_of(w) for w in s_values]
    rows = [_evaluate(vector, s_values, i) for i, vector in enumerate(BranchingKnowledgeBase.VECTORS)]

    overall = TableRow(rule="Overall", family="", formula="max of above")
    for s in s_values:
        overall.raw[s] = max(r.raw[s] for r in rows)
        overall.values[s] = upround(overall.raw[s])
        overall.printed[s] = BranchingKnowledgeBase.printed_overall(s)
        if overall.printed[s] is not None and abs(overall.printed[s] - overall.values[s]) > MISMATCH_TOLERANCE:
            overall.mismatches.append(s)
    rows.append(overall)

    flagged = sum(len(r.mismatches) for r in rows)
    if flagged:
        logger.info(f"{flagged} computed entries differ from the printed table")
    return rows


def supplementary_table(s_values: Iterable = DEFAULT_S_VALUES) -> List[TableRow]:
    s_values = [_s_of(w) for w in s_values]
    return [_evaluate(vector, s_values) for vector in BranchingKnowledgeBase.SUPPLEMENTARY]


def overall_max(s: float) -> float:
    return max(tau(vector.evaluate(s)) for vector in BranchingKnowledgeBase.VECTORS)


def s_grid(step: float) -> np.ndarray:
    """Grid over [0.5, 1] starting at 0.5 with the given step"""
    if step <= 0:
        raise ValueError("step must be positive")
    count = int(math.floor(0.5 / step + 1e-9))
    return np.round(0.5 + step * np.arange(count + 1), 10)


def optimize_s(step: float = 0.001) -> Tuple[float, float]:
    """Grid point minimising the overall maximum factor; ties go to the smaller s"""
    best_s, best = None, math.inf
    for s in s_grid(step):
        value = overall_max(float(s))
        if value < best:
            best_s, best = float(s), value
    logger.info(f"Best weight s={best_s} with overall factor {upround(best)}")
    return best_s, best


def line_graph_factor(mis_base: float = BranchingKnowledgeBase.LINE_GRAPH_MIS_BASE) -> float:
    """Per-node factor of solving MIS on the m <= 3n/2 nodes of the reduced graph"""
    return upround(mis_base ** 1.5)
