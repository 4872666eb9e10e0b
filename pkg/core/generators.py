"""
Named graph families
"""

import logging
from typing import Callable, Dict

import networkx as nx

from core.graph import Graph, cartesian_product
from models import FamilyKind, FamilySpec

logger = logging.getLogger(__name__)

# networkx builders already number paths and cycles along the walk,
# the star's centre as 0 and multipartite parts consecutively
_BUILDERS: Dict[FamilyKind, Callable[[FamilySpec], nx.Graph]] = {
    FamilyKind.PATH: lambda spec: nx.path_graph(spec.size),
    FamilyKind.CYCLE: lambda spec: nx.cycle_graph(spec.size),
    FamilyKind.COMPLETE: lambda spec: nx.complete_graph(spec.size),
    FamilyKind.EMPTY: lambda spec: nx.empty_graph(spec.size),
    FamilyKind.STAR: lambda spec: nx.star_graph(spec.size),
    FamilyKind.MULTIPARTITE: lambda spec: nx.complete_multipartite_graph(*spec.parts),
}


def generate(spec: FamilySpec) -> Graph:
    """Build the graph named by ``spec`` with canonical numbering.

    Paths and cycles are numbered along the walk, multipartite parts
    consecutively part by part (the star's centre first) and product vertex
    (u, v) as u*|V(h)| + v.
    """
    if spec.kind is FamilyKind.PRODUCT:
        return cartesian_product(generate(spec.left), generate(spec.right))
    builder = _BUILDERS.get(spec.kind)
    if builder is None:
        raise ValueError(f"unhandled family kind {spec.kind}")
    graph = Graph.from_networkx(builder(spec))
    logger.debug(f"Generated {spec.describe()}: {graph.n} vertices, {graph.edge_count} edges")
    return graph
