from .bench import CSV_COLUMNS, run_bench, write_csv, to_frame, fit_growth_slope, growth_within_bound, instance_seeds
from .report import emit_table, table_frame

__all__ = [
    'CSV_COLUMNS', 'run_bench', 'write_csv', 'to_frame', 'fit_growth_slope', 'growth_within_bound',
    'instance_seeds', 'emit_table', 'table_frame',
]
