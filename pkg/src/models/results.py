from typing import List, Optional, Dict, Tuple
from pydantic import BaseModel, ConfigDict, Field

from ..config import config


class Weighting(BaseModel):
    """Degree weighting of the measure: degree 3 -> 1, degree 2 -> s, else 0"""
    model_config = ConfigDict(frozen=True)

    s: float = Field(config.WEIGHT_S, ge=0.5, le=1.0, description="Weight of a degree-2 node")


class SolverConfig(BaseModel):
    """Settings of one AlgoMIM run"""
    s: float = Field(config.WEIGHT_S, ge=0.5, le=1.0, description="Measure weight, reporting only")
    kappa: int = Field(config.KAPPA, ge=3, description="Degree-3 threshold for bisecting instead of S2")
    seed: int = Field(config.SEED, description="Seed of the bisection heuristic")
    assertion_level: int = Field(config.ASSERTION_LEVEL, ge=0, le=2)
    bisection_starts: int = Field(config.BISECTION_STARTS, ge=1)

    model_config = ConfigDict(
        json_schema_extra={
            "example": {"s": 0.636, "kappa": 12, "seed": 1, "assertion_level": 1, "bisection_starts": 8}
        }
    )


class SolveStats(BaseModel):
    """Search-tree statistics of one solve"""
    nodes_expanded: int = 0
    leaves: int = 0
    rule_counts: Dict[str, int] = Field(default_factory=dict)
    max_depth: int = 0
    bisections: int = 0
    cut_sizes: List[int] = Field(default_factory=list)
    measure: float = Field(0.0, description="Measure of the input graph at the configured s")
    measure_bound: float = Field(0.0, description="1.2630 ** measure")
    elapsed: float = 0.0

    def count(self, rule: str):
        self.rule_counts[rule] = self.rule_counts.get(rule, 0) + 1


class OracleResult(BaseModel):
    """Exhaustive maximum induced matching"""
    size: int
    witness: List[Tuple[int, int]] = Field(default_factory=list)
    explored: int = 0


class TableRow(BaseModel):
    """One branching-factor row evaluated at several weightings"""
    rule: str
    family: str = ""
    formula: str
    values: Dict[float, float] = Field(default_factory=dict, description="Uprounded factors per s")
    raw: Dict[float, float] = Field(default_factory=dict)
    printed: Dict[float, Optional[float]] = Field(default_factory=dict)
    mismatches: List[float] = Field(default_factory=list, description="s values where printed != computed")


class BenchRecord(BaseModel):
    """One benchmark row"""
    instance_id: str
    n: int
    m: int
    degree3: int
    seed: int
    solver_size: Optional[int] = None
    oracle_size: Optional[int] = None
    baseline_size: Optional[int] = None
    leaves: Optional[int] = None
    nodes_expanded: Optional[int] = None
    bisections: Optional[int] = None
    wall_time: float = 0.0
    error: Optional[str] = None

    @property
    def sizes_agree(self) -> bool:
        sizes = {v for v in (self.solver_size, self.oracle_size, self.baseline_size) if v is not None}
        return len(sizes) <= 1
