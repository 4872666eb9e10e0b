"""
Realization Gadgets Package
"""

from .gadgets import (
    build,
    join_structure_graph,
    plan_roman_vs_pid,
    realize_induced,
    realize_roman_vs_pid,
)
from .recognizer import has_join_structure, join_structure_witness
from .verification import check_realization

__all__ = [
    'build',
    'plan_roman_vs_pid',
    'realize_induced',
    'realize_roman_vs_pid',
    'join_structure_graph',
    'has_join_structure',
    'join_structure_witness',
    'check_realization'
]
