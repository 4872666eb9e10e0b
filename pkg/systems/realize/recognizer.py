"""
Recognizer for graphs whose PID number is at most 2
"""

import logging
from typing import Optional

from core.errors import GraphError
from core.graph import Graph
from core.labeling import Labeling

logger = logging.getLogger(__name__)


def join_structure_witness(graph: Graph) -> Optional[Labeling]:
    """Weight-2 style labeling if ``graph`` is K1, K2 or 2K1 joined to the rest.

    A universal vertex gets 2; otherwise a pair (adjacent or not) that every
    remaining vertex sees gets 1 each. Returns None when neither exists.
    """
    if graph.n == 0:
        raise GraphError("recognizer needs a nonempty graph")
    full = (1 << graph.n) - 1
    for v in graph.vertices():
        if graph.mask(v) | (1 << v) == full:
            values = [0] * graph.n
            values[v] = 2 if graph.n > 1 else 1
            return Labeling.of(values)
    for v in graph.vertices():
        for w in range(v + 1, graph.n):
            others = full & ~(1 << v) & ~(1 << w)
            if graph.mask(v) & others == others and graph.mask(w) & others == others:
                values = [0] * graph.n
                values[v] = values[w] = 1
                return Labeling.of(values)
    return None


def has_join_structure(graph: Graph) -> bool:
    """True iff some vertex sees all others, or some pair is seen by all others"""
    return join_structure_witness(graph) is not None
