from .state import Alternative, RuleMatch, SolverState, select, drop
from .simplification import (
    apply_S1, solve_small_S2, S3Match, find_S3, find_S4, apply_S4, find_simplification, apply_simplification,
)
from .branching import (
    StuckStateError, match_B21, match_B22, match_B31, match_B32, match_B33, match_B41, match_branching,
    BRANCHING_ORDER,
)

__all__ = [
    'Alternative', 'RuleMatch', 'SolverState', 'select', 'drop',
    'apply_S1', 'solve_small_S2', 'S3Match', 'find_S3', 'find_S4', 'apply_S4', 'find_simplification',
    'apply_simplification',
    'StuckStateError', 'match_B21', 'match_B22', 'match_B31', 'match_B32', 'match_B33', 'match_B41',
    'match_branching', 'BRANCHING_ORDER',
]
