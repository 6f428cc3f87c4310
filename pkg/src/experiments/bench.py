"""
Benchmark runs: random instances through the solver, the oracle and the baseline
Rows come back in (size, trial) order whatever the worker pool does
"""

import logging
import math
import time
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

from ..config import config
from ..graphs.generator import random_subcubic
from ..models.results import BenchRecord, SolverConfig
from ..solvers.branch_and_reduce import AlgoMIMSolver, verify_solution
from ..solvers.baseline import cameron_mim
from ..solvers.oracle import brute_force_mim

logger = logging.getLogger(__name__)

CSV_COLUMNS = [
    "instance_id", "n", "m", "degree3", "seed", "solver_size", "oracle_size", "baseline_size",
    "leaves", "nodes_expanded", "bisections", "wall_time", "error",
]

DEFAULT_P3 = 0.75


def _run_one(instance_id: str, n: int, seed: int, p3: float, cfg: SolverConfig,
             with_oracle: bool, with_baseline: bool) -> BenchRecord:
    try:
        g = random_subcubic(n, p3, seed)
    except (ValueError, RuntimeError) as e:
        logger.error(f"{instance_id}: generation failed: {e}")
        return BenchRecord(instance_id=instance_id, n=n, m=0, degree3=0, seed=seed, error=str(e))

    record = BenchRecord(instance_id=instance_id, n=g.n, m=g.m, degree3=g.degree3_count(), seed=seed)
    start = time.perf_counter()
    try:
        solver = AlgoMIMSolver(cfg)
        result = solver.solve(g)
        if not verify_solution(g, result):
            raise RuntimeError("solver output is not an induced matching")
        record.solver_size = len(result)
        record.leaves = solver.stats.leaves
        record.nodes_expanded = solver.stats.nodes_expanded
        record.bisections = solver.stats.bisections

        # oracle switched off above its guard
        if with_oracle and g.m <= config.ORACLE_MAX_EDGES:
            record.oracle_size = brute_force_mim(g).size
        if with_baseline:
            record.baseline_size = len(cameron_mim(g))
        if not record.sizes_agree:
            record.error = "sizes disagree"
    except (ValueError, RuntimeError) as e:
        logger.error(f"{instance_id}: {e}")
        record.error = str(e)
    record.wall_time = time.perf_counter() - start
    return record


def instance_seeds(sizes: Sequence[int], trials: int, seed: int) -> List[Tuple[int, int, int]]:
    """(size, trial, instance seed) in row order"""
    rng = np.random.default_rng(seed)
    rows = []
    for n in sizes:
        for trial in range(trials):
            rows.append((n, trial, int(rng.integers(0, 2 ** 31 - 1))))
    return rows


def run_bench(sizes: Sequence[int], trials: int, seed: int = config.SEED,
              csv_path: Optional[Union[str, Path]] = None, p3: float = DEFAULT_P3,
              cfg: Optional[SolverConfig] = None, with_oracle: bool = True,
              with_baseline: bool = False, n_jobs: int = config.BENCH_JOBS) -> List[BenchRecord]:
    if not sizes:
        raise ValueError("At least one instance size is required")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    cfg = cfg or SolverConfig(seed=seed)

    plan = instance_seeds(sizes, trials, seed)
    records = Parallel(n_jobs=n_jobs)(
        delayed(_run_one)(f"n{n}-t{trial}", n, inst_seed, p3, cfg, with_oracle, with_baseline)
        for n, trial, inst_seed in plan
    )
    failed = sum(1 for r in records if r.error)
    logger.info(f"Bench finished: {len(records)} rows, {failed} with errors")

    if csv_path is not None:
        write_csv(records, csv_path)
    return records


def to_frame(records: Sequence[BenchRecord]) -> pd.DataFrame:
    return pd.DataFrame([r.model_dump() for r in records], columns=CSV_COLUMNS)


def write_csv(records: Sequence[BenchRecord], path: Union[str, Path]):
    to_frame(records).to_csv(path, index=False)
    logger.info(f"Wrote {len(records)} rows to {path}")


def fit_growth_slope(records: Sequence[BenchRecord]) -> Optional[float]:
    """Least-squares slope of ln(leaves) against n"""
    points = [(r.n, math.log(r.leaves)) for r in records if r.leaves and not r.error]
    if len({n for n, _ in points}) < 2:
        return None
    ns, logs = zip(*points)
    slope, _ = np.polyfit(np.array(ns, dtype=float), np.array(logs), 1)
    return float(slope)


def growth_within_bound(slope: Optional[float]) -> bool:
    if slope is None:
        return True
    return slope <= math.log(config.GROWTH_BASE) + config.GROWTH_SLACK
