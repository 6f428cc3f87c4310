"""
Text and CSV rendering of the branching-factor table
"""

import logging
from typing import Iterable, List, Optional

import pandas as pd

from ..knowledge.branching_vectors import BranchingKnowledgeBase
from ..measure.table import DEFAULT_S_VALUES, MISMATCH_TOLERANCE, line_graph_factor, supplementary_table, theorem_table
from ..models.results import TableRow

logger = logging.getLogger(__name__)


def table_frame(rows: List[TableRow], s_values: List[float]) -> pd.DataFrame:
    records = []
    for row in rows:
        record = {"rule": row.rule, "family": row.family, "vector": row.formula}
        for s in s_values:
            record[f"s={s:g}"] = f"{row.values[s]:.4f}"
            printed = row.printed.get(s)
            record[f"printed s={s:g}"] = "" if printed is None else f"{printed:g}"
        record["mismatch"] = ",".join(f"{s:g}" for s in row.mismatches)
        records.append(record)
    return pd.DataFrame(records)


def emit_table(s_values: Optional[Iterable[float]] = None, csv: bool = False,
               supplementary: bool = False) -> str:
    """Branching-factor table with an overall row and flags where the printed values differ"""
    s_values = [float(s) for s in (s_values if s_values is not None else DEFAULT_S_VALUES)]
    rows = theorem_table(s_values)
    if supplementary:
        rows = rows + supplementary_table(s_values)
    frame = table_frame(rows, s_values)

    if csv:
        return frame.to_csv(index=False)

    lines = [frame.to_string(index=False)]
    flagged = [(row, s) for row in rows for s in row.mismatches]
    for row, s in flagged:
        lines.append(f"! {row.rule} {row.formula} at s={s:g}: printed {row.printed[s]:g}, "
                     f"computed {row.values[s]:.4f}")
    if supplementary:
        factor = line_graph_factor()
        lines.append(f"line-graph route: {BranchingKnowledgeBase.LINE_GRAPH_MIS_BASE} ** 1.5 = {factor:.4f}")
        printed = BranchingKnowledgeBase.LINE_GRAPH_PRINTED
        if abs(factor - printed) > MISMATCH_TOLERANCE:
            lines.append(f"! line-graph route: printed {printed:g}, computed {factor:.4f}")
    return "\n".join(lines)
