from .results import Weighting, SolverConfig, SolveStats, OracleResult, TableRow, BenchRecord

__all__ = ['Weighting', 'SolverConfig', 'SolveStats', 'OracleResult', 'TableRow', 'BenchRecord']
