import math

import pandas as pd
import pytest

from src.config import config
from src.experiments.bench import (
    CSV_COLUMNS, fit_growth_slope, growth_within_bound, instance_seeds, run_bench, write_csv,
)
from src.models.results import BenchRecord, SolverConfig


def _record(n: int, leaves: int, error=None) -> BenchRecord:
    return BenchRecord(instance_id=f"n{n}", n=n, m=n, degree3=0, seed=0, leaves=leaves, error=error)


def test_small_run_agrees_with_oracle():
    records = run_bench([10], 3, seed=1, with_baseline=True)
    assert len(records) == 3
    assert [r.instance_id for r in records] == ["n10-t0", "n10-t1", "n10-t2"]
    for r in records:
        assert r.error is None
        assert r.solver_size == r.oracle_size == r.baseline_size
        assert r.leaves >= 1


def test_run_is_deterministic():
    cfg = SolverConfig(kappa=3, seed=2)
    first = run_bench([12], 2, seed=7, cfg=cfg)
    second = run_bench([12], 2, seed=7, cfg=cfg)
    strip = lambda rows: [r.model_dump(exclude={"wall_time"}) for r in rows]
    assert strip(first) == strip(second)


def test_instance_seeds_order():
    plan = instance_seeds([5, 6], 2, seed=3)
    assert [(n, t) for n, t, _ in plan] == [(5, 0), (5, 1), (6, 0), (6, 1)]
    assert plan == instance_seeds([5, 6], 2, seed=3)


def test_csv_header(tmp_path):
    path = tmp_path / "rows.csv"
    write_csv([_record(10, 4)], path)
    frame = pd.read_csv(path)
    assert list(frame.columns) == CSV_COLUMNS


@pytest.mark.parametrize("sizes, trials", [([], 1), ([10], 0)])
def test_rejects_empty_plans(sizes, trials):
    with pytest.raises(ValueError):
        run_bench(sizes, trials)


def test_growth_slope_on_exact_exponential():
    records = [_record(n, round(math.exp(0.2 * n))) for n in (10, 20, 30, 40)]
    assert fit_growth_slope(records) == pytest.approx(0.2, abs=0.01)


def test_growth_slope_skips_errors_and_single_sizes():
    assert fit_growth_slope([_record(10, 5), _record(10, 7)]) is None
    assert fit_growth_slope([_record(10, 5), _record(20, 9, error="boom")]) is None


def test_growth_bound():
    limit = math.log(config.GROWTH_BASE) + config.GROWTH_SLACK
    assert growth_within_bound(None)
    assert growth_within_bound(limit - 0.01)
    assert not growth_within_bound(limit + 0.01)


@pytest.mark.slow
def test_growth_on_larger_instances():
    cfg = SolverConfig(kappa=12)
    records = run_bench([20, 30, 40, 50, 60], 10, seed=1, cfg=cfg, with_oracle=False)
    assert not [r for r in records if r.error]
    assert growth_within_bound(fit_growth_slope(records))
