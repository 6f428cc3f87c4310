from .graph import Graph, Edge, EdgeSet, canonical_edge, sorted_edges, is_induced_matching, edge_conflicts, disjoint_union
from .dimacs import (
    GraphFormatError, parse_graph, read_graph, format_graph, write_graph, format_matching, parse_sides, format_sides,
)
from .generator import random_subcubic, path_graph, cycle_graph, petersen_graph, complete_graph, relabel_from_one

__all__ = [
    'Graph', 'Edge', 'EdgeSet', 'canonical_edge', 'sorted_edges', 'is_induced_matching', 'edge_conflicts',
    'disjoint_union', 'GraphFormatError', 'parse_graph', 'read_graph', 'format_graph', 'write_graph',
    'format_matching', 'parse_sides', 'format_sides', 'random_subcubic', 'path_graph', 'cycle_graph',
    'petersen_graph', 'complete_graph', 'relabel_from_one',
]
