"""
Immutable simple graphs and the combinators used to build families and gadgets
"""

import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from core.errors import GraphError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


class Graph:
    """Finite simple undirected graph on vertices 0..n-1.

    Neighbourhoods are stored both as sorted tuples and as integer bitmasks;
    the solver walks the tuples and the recognizer tests the masks. Instances
    never change after construction, so they are safe to share.
    """

    __slots__ = ("_n", "_neighbors", "_masks", "_names", "_edge_count")

    def __init__(self, n: int, neighbors: Sequence[Sequence[int]], names: Optional[Sequence[str]] = None):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        if len(neighbors) != n:
            raise GraphError(f"expected {n} neighbour lists, got {len(neighbors)}")
        if names is not None and len(names) != n:
            raise GraphError(f"expected {n} vertex names, got {len(names)}")
        self._n = n
        self._neighbors = tuple(tuple(sorted(adj)) for adj in neighbors)
        masks = []
        degree_total = 0
        for v, adj in enumerate(self._neighbors):
            mask = 0
            for u in adj:
                if u == v:
                    raise GraphError(f"self-loop at vertex {v}")
                if not 0 <= u < n:
                    raise GraphError(f"vertex {v} lists out-of-range neighbour {u}")
                mask |= 1 << u
            if bin(mask).count("1") != len(adj):
                raise GraphError(f"vertex {v} lists a neighbour twice")
            masks.append(mask)
            degree_total += len(adj)
        for v in range(n):
            for u in self._neighbors[v]:
                if not masks[u] >> v & 1:
                    raise GraphError(f"adjacency is not symmetric between {v} and {u}")
        self._masks = tuple(masks)
        self._names = tuple(names) if names is not None else None
        self._edge_count = degree_total // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge], names: Optional[Sequence[str]] = None) -> "Graph":
        adjacency: List[set] = [set() for _ in range(n)]
        for u, v in edges:
            _check_edge(n, u, v)
            if v in adjacency[u]:
                raise GraphError(f"duplicate edge {min(u, v)}-{max(u, v)}")
            adjacency[u].add(v)
            adjacency[v].add(u)
        return cls(n, adjacency, names)

    @property
    def n(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return self._edge_count

    @property
    def names(self) -> Optional[Tuple[str, ...]]:
        return self._names

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._neighbors[v]

    def mask(self, v: int) -> int:
        return self._masks[v]

    def degree(self, v: int) -> int:
        return len(self._neighbors[v])

    def max_degree(self) -> int:
        return max((len(adj) for adj in self._neighbors), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self._n and 0 <= v < self._n and bool(self._masks[u] >> v & 1)

    def name(self, v: int) -> str:
        return self._names[v] if self._names is not None else str(v)

    def edges(self) -> List[Edge]:
        """Edges as (u, v) with u < v, sorted lexicographically"""
        return [(u, v) for u in range(self._n) for v in self._neighbors[u] if u < v]

    def with_names(self, names: Optional[Sequence[str]]) -> "Graph":
        return Graph(self._n, self._neighbors, names)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self._n))
        graph.add_edges_from(self.edges())
        return graph

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Relabel nodes 0..n-1 in sorted node order"""
        nodes = sorted(graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in graph.edges() if u != v))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._masks == other._masks

    def __hash__(self) -> int:
        return hash((self._n, self._masks))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self._edge_count})"


def _check_edge(n: int, u: int, v: int):
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"edge {u}-{v} has an endpoint outside 0..{n - 1}")
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")


class GraphBuilder:
    """Mutable staging area for gadgets; call freeze() to get a Graph"""

    def __init__(self):
        self._adjacency: List[set] = []
        self._names: List[str] = []

    @property
    def n(self) -> int:
        return len(self._adjacency)

    def add_vertex(self, name: Optional[str] = None) -> int:
        self._adjacency.append(set())
        self._names.append(name if name is not None else str(len(self._names)))
        return len(self._adjacency) - 1

    def add_vertices(self, names: Iterable[str]) -> List[int]:
        return [self.add_vertex(name) for name in names]

    def add_edge(self, u: int, v: int):
        _check_edge(self.n, u, v)
        if v in self._adjacency[u]:
            raise GraphError(f"duplicate edge {min(u, v)}-{max(u, v)}")
        self._adjacency[u].add(v)
        self._adjacency[v].add(u)

    def add_path(self, vertices: Sequence[int]):
        for u, v in zip(vertices, vertices[1:]):
            self.add_edge(u, v)

    def connect(self, u: int, others: Iterable[int]):
        for v in others:
            self.add_edge(u, v)

    def freeze(self) -> Graph:
        return Graph(self.n, self._adjacency, self._names)


def _require_nonempty(*graphs: Graph):
    for graph in graphs:
        if graph.n == 0:
            raise GraphError("operation needs nonempty graphs")


def _merged_names(g: Graph, h: Graph) -> Optional[List[str]]:
    if g.names is None and h.names is None:
        return None
    return [g.name(v) for v in g.vertices()] + [h.name(v) for v in h.vertices()]


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """g's vertices keep their ids; h's are shifted by |V(g)|"""
    _require_nonempty(g, h)
    shift = g.n
    edges = g.edges() + [(u + shift, v + shift) for u, v in h.edges()]
    return Graph.from_edges(g.n + h.n, edges, _merged_names(g, h))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides"""
    _require_nonempty(g, h)
    shift = g.n
    edges = g.edges() + [(u + shift, v + shift) for u, v in h.edges()]
    edges.extend((u, v + shift) for u in g.vertices() for v in h.vertices())
    return Graph.from_edges(g.n + h.n, edges, _merged_names(g, h))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """g □ h with (u, v) numbered u*|V(h)| + v"""
    _require_nonempty(g, h)
    width = h.n
    edges: List[Edge] = []
    for u in g.vertices():
        for a, b in h.edges():
            edges.append((u * width + a, u * width + b))
    for a, b in g.edges():
        for v in h.vertices():
            edges.append((a * width + v, b * width + v))
    names = None
    if g.names is not None or h.names is not None:
        names = [f"({g.name(u)},{h.name(v)})" for u in g.vertices() for v in h.vertices()]
    logger.debug(f"Built product of {g!r} and {h!r}")
    return Graph.from_edges(g.n * width, edges, names)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Keep ``vertices`` renumbered 0..k-1 in ascending order"""
    chosen = sorted(set(vertices))
    if not chosen:
        raise GraphError("induced subgraph needs at least one vertex")
    for v in chosen:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} is not in a graph on {g.n} vertices")
    index: Dict[int, int] = {v: i for i, v in enumerate(chosen)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    names = [g.name(v) for v in chosen] if g.names is not None else None
    return Graph.from_edges(len(chosen), edges, names)
