"""
Graph Families Package
"""

from .formulas import FORMULA_SOURCES, ITALIAN_LADDER_SOURCE, italian_formula_p2pn, pid_formula
from .products import product_upper_bound
from .witnesses import pid_witness

__all__ = [
    'FORMULA_SOURCES',
    'ITALIAN_LADDER_SOURCE',
    'pid_formula',
    'pid_witness',
    'italian_formula_p2pn',
    'product_upper_bound'
]
