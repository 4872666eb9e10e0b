"""
Random Graph Corpus
Seeded G(n, p) samples for property checks and sweeps
"""

import logging
from typing import List, Optional

import networkx as nx
import numpy as np

from core.errors import InvalidInputError
from core.graph import Graph

logger = logging.getLogger(__name__)

MAX_ATTEMPTS = 200


def _check(n: int, p: float):
    if n < 1:
        raise InvalidInputError(f"corpus graphs need at least one vertex, got {n}")
    if not 0.0 <= p <= 1.0:
        raise InvalidInputError(f"edge probability must lie in [0, 1], got {p}")


def random_graph(n: int, p: float, seed: Optional[int] = None) -> Graph:
    """G(n, p) sample; the same seed always gives the same graph"""
    _check(n, p)
    return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))


def random_connected_graph(n: int, p: float, seed: Optional[int] = None) -> Graph:
    """Resample G(n, p) until connected, then fall back to adding a spanning path"""
    _check(n, p)
    rng = np.random.default_rng(seed)
    for _ in range(MAX_ATTEMPTS):
        sample = nx.gnp_random_graph(n, p, seed=int(rng.integers(2**31)))
        if nx.is_connected(sample):
            return Graph.from_networkx(sample)
    logger.debug(f"No connected G({n}, {p}) in {MAX_ATTEMPTS} draws; joining components")
    sample = nx.gnp_random_graph(n, p, seed=int(rng.integers(2**31)))
    components = [min(component) for component in nx.connected_components(sample)]
    nx.add_path(sample, sorted(components))
    return Graph.from_networkx(sample)


def random_corpus(count: int, max_vertices: int, seed: Optional[int] = None, min_vertices: int = 1) -> List[Graph]:
    """``count`` graphs with between min_vertices and max_vertices vertices.

    Vertex counts and edge densities are drawn from one numpy generator so
    the whole corpus is reproducible from ``seed``.
    """
    if count < 0:
        raise InvalidInputError(f"count must be non-negative, got {count}")
    if not 1 <= min_vertices <= max_vertices:
        raise InvalidInputError(f"need 1 <= min_vertices <= max_vertices, got {min_vertices}..{max_vertices}")
    rng = np.random.default_rng(seed)
    sizes = rng.integers(min_vertices, max_vertices + 1, size=count)
    densities = rng.uniform(0.15, 0.85, size=count)
    seeds = rng.integers(2**31, size=count)
    corpus = [random_graph(int(n), float(p), int(s)) for n, p, s in zip(sizes, densities, seeds)]
    logger.debug(f"Generated corpus of {count} graphs up to {max_vertices} vertices (seed={seed})")
    return corpus
