from .base_solver import BaseSolver
from .validator import SolutionValidator
from .branch_and_reduce import AlgoMIMSolver, algo_mim, verify_solution
from .oracle import OracleGuardError, BruteForceOracle, brute_force_mim
from .baseline import ReducedGraph, MISSearch, CameronSolver, build_l_g2, mis_solve, cameron_mim

__all__ = [
    'BaseSolver', 'SolutionValidator', 'AlgoMIMSolver', 'algo_mim', 'verify_solution',
    'OracleGuardError', 'BruteForceOracle', 'brute_force_mim',
    'ReducedGraph', 'MISSearch', 'CameronSolver', 'build_l_g2', 'mis_solve', 'cameron_mim',
]
