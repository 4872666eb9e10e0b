"""
Exact Solver Package
"""

from .prunes import PruneRule, rule_for
from .search import BranchAndBoundSolver, enumerate_optima, profile, solve

__all__ = [
    'PruneRule',
    'rule_for',
    'BranchAndBoundSolver',
    'solve',
    'enumerate_optima',
    'profile'
]
