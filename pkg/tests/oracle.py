"""
Exhaustive reference enumerator for small graphs.

Scores every labeling at once with numpy. It shares no code with the
branch-and-bound search.
"""

from itertools import product
from typing import List, Tuple

import numpy as np

from core.graph import Graph
from models import DominationVariant


def adjacency_matrix(graph: Graph) -> np.ndarray:
    matrix = np.zeros((graph.n, graph.n), dtype=np.int64)
    for u, v in graph.edges():
        matrix[u, v] = matrix[v, u] = 1
    return matrix


def _valid_rows(graph: Graph, variant: DominationVariant) -> np.ndarray:
    values = 2 if variant is DominationVariant.DOMINATION else 3
    labelings = np.array(list(product(range(values), repeat=graph.n)), dtype=np.int64)
    adjacency = adjacency_matrix(graph)
    sums = labelings @ adjacency
    twos = (labelings == 2).astype(np.int64) @ adjacency
    if variant is DominationVariant.PERFECT_ITALIAN:
        covered = sums == 2
    elif variant is DominationVariant.ITALIAN:
        covered = sums >= 2
    elif variant is DominationVariant.ROMAN:
        covered = twos > 0
    else:
        covered = sums >= 1
    valid = np.all((labelings > 0) | covered, axis=1)
    return labelings[valid]


def oracle_optimum(graph: Graph, variant: DominationVariant) -> int:
    rows = _valid_rows(graph, variant)
    return int(rows.sum(axis=1).min())


def oracle_optima(graph: Graph, variant: DominationVariant) -> List[Tuple[int, ...]]:
    """Every minimum-weight valid labeling in lexicographic order"""
    rows = _valid_rows(graph, variant)
    weights = rows.sum(axis=1)
    best = rows[weights == weights.min()]
    return [tuple(int(x) for x in row) for row in best]
