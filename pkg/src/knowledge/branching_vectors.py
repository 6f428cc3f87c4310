"""
Branching vectors of the AlgoMIM branching rules
Holds the vector expressions as affine forms in s and the values printed for them
"""

from typing import List, Optional, Tuple
from dataclasses import dataclass

# Affine form a + b*s
Affine = Tuple[float, float]


@dataclass(frozen=True)
class BranchingVector:
    """One branching vector expression"""
    rule: str
    family: str
    terms: Tuple[Affine, ...]

    @property
    def formula(self) -> str:
        return "τ(" + ",".join(_format_affine(a, b) for a, b in self.terms) + ")"

    def evaluate(self, s: float) -> Tuple[float, ...]:
        return tuple(a + b * s for a, b in self.terms)


def _format_affine(a: float, b: float) -> str:
    head = f"{a:g}"
    if b == 0:
        return head
    sign = "+" if b > 0 else "-"
    coeff = "" if abs(b) == 1 else f"{abs(b):g}"
    return f"{head}{sign}{coeff}s"


class BranchingKnowledgeBase:
    """Vector expressions of the branching rules and their published values"""

    VECTORS: List[BranchingVector] = [
        BranchingVector("B2.1, B2.2", "two-way", ((3, 1), (4, 0))),
        BranchingVector("B2.1, B2.2", "two-way", ((4, -1), (5, -1))),
        BranchingVector("B3.1, B3.2 b-side", "three-way b-side", ((3, 4), (3, 4), (3, 4))),
        BranchingVector("B3.1, B3.2 b-side", "three-way b-side", ((4, 0), (4, 1), (5, 1))),
        BranchingVector("B3.2 a-side, B3.3", "three-way a-side", ((4, -1), (4, 2), (6, 0))),
        BranchingVector("B3.2 a-side, B3.3", "three-way a-side", ((4, -1), (4, 3), (4, 3))),
        BranchingVector("B3.2 a-side, B3.3", "three-way a-side", ((4, -1), (5, 0), (7, -1))),
        BranchingVector("B3.2 a-side, B3.3", "three-way a-side", ((4, -1), (6, -2), (6, 1))),
        BranchingVector("B3.2 a-side, B3.3", "three-way a-side", ((4, -1), (6, -2), (8, -2))),
        BranchingVector("B4.1", "four-way", ((6, 2), (6, 2), (6, 2), (6, 2))),
    ]

    # B4.1 when the middle node has degree 2; dominated by the four-way row
    SUPPLEMENTARY: List[BranchingVector] = [
        BranchingVector("B4.1 (degree 2)", "four-way", ((6, 1), (6, 1), (6, 1))),
    ]

    PRINTED_S = (0.6, 0.636, 0.7)

    # Values as published, row by row, at s = 0.6, 0.636, 0.7
    PRINTED_VALUES: List[Tuple[float, float, float]] = [
        (1.2004, 1.1993, 1.1974),
        (1.1958, 1.1978, 1.2015),
        (1.2257, 1.2192, 1.2086),
        (1.2644, 1.2630, 1.2606),
        (1.2618, 1.2615, 1.2610),
        (1.2544, 1.2520, 1.2478),
        (1.2596, 1.2612, 1.2641),
        (1.2609, 1.2630, 1.669),
        (1.2582, 1.2617, 1.2683),
        (1.2124, 1.2030, 1.2061),
    ]

    PRINTED_OVERALL = (1.2644, 1.2630, 1.2683)

    # MIS base of the line-graph route; m <= 3n/2 turns it into a per-node factor
    LINE_GRAPH_MIS_BASE = 1.1996
    LINE_GRAPH_PRINTED = 1.3139

    @classmethod
    def printed_value(cls, row: int, s: float) -> Optional[float]:
        """Published value of a row at s, if that s was printed"""
        for i, printed_s in enumerate(cls.PRINTED_S):
            if abs(printed_s - s) < 1e-9:
                return cls.PRINTED_VALUES[row][i]
        return None

    @classmethod
    def printed_overall(cls, s: float) -> Optional[float]:
        for i, printed_s in enumerate(cls.PRINTED_S):
            if abs(printed_s - s) < 1e-9:
                return cls.PRINTED_OVERALL[i]
        return None
