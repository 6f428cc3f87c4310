from .contraction import BisectionError, ContractedGraph, Strand, Pendant, contract_degree2
from .cut import Cut, balanced_bisect, repair_double_edges, expand_cut, cut_violations, compute_cut, cut_from_sides

__all__ = [
    'BisectionError', 'ContractedGraph', 'Strand', 'Pendant', 'contract_degree2',
    'Cut', 'balanced_bisect', 'repair_double_edges', 'expand_cut', 'cut_violations', 'compute_cut',
    'cut_from_sides',
]
