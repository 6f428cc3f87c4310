from .tau import node_weight, graph_measure, tau, upround, residual
from .table import theorem_table, supplementary_table, optimize_s, overall_max, s_grid, line_graph_factor

__all__ = [
    'node_weight', 'graph_measure', 'tau', 'upround', 'residual',
    'theorem_table', 'supplementary_table', 'optimize_s', 'overall_max', 's_grid', 'line_graph_factor',
]
