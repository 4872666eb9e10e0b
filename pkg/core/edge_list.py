"""
Edge-list text format.

    # optional comments; '# name <id> <label>' lines carry vertex names
    <n>
    <u> <v>
    ...

Identifiers are 0-based. Serialization sorts edges and ends every line
with a single newline.
"""

import logging
from typing import Dict, List, Optional, Set, Tuple

from core.errors import EdgeListParseError
from core.graph import Graph

logger = logging.getLogger(__name__)

NAME_PREFIX = "# name "


def _identifier(token: str) -> Optional[int]:
    """Non-negative ASCII integer, or None"""
    if not (token.isascii() and token.isdigit()):
        return None
    return int(token)


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text; every error names the offending line"""
    n: Optional[int] = None
    edges: List[Tuple[int, int]] = []
    seen: Set[Tuple[int, int]] = set()
    names: Dict[int, str] = {}
    name_lines: Dict[int, int] = {}

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if line.startswith(NAME_PREFIX):
                parts = line[len(NAME_PREFIX):].split(None, 1)
                vertex = _identifier(parts[0]) if len(parts) == 2 else None
                if vertex is None:
                    raise EdgeListParseError(f"malformed name comment '{line}'", line_number)
                if vertex in names:
                    raise EdgeListParseError(f"vertex {vertex} named twice", line_number)
                names[vertex] = parts[1].strip()
                name_lines[vertex] = line_number
            continue

        tokens = line.split()
        if n is None:
            n = _identifier(tokens[0]) if len(tokens) == 1 else None
            if n is None:
                raise EdgeListParseError(f"expected the vertex count, got '{line}'", line_number)
            continue

        if len(tokens) != 2:
            raise EdgeListParseError(f"expected 'u v', got '{line}'", line_number)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListParseError(f"non-integer endpoint in '{line}'", line_number) from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(f"endpoint out of range 0..{n - 1} in '{line}'", line_number)
        if u == v:
            raise EdgeListParseError(f"self-loop at vertex {u}", line_number)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListParseError(f"duplicate edge {key[0]}-{key[1]}", line_number)
        seen.add(key)
        edges.append(key)

    if n is None:
        raise EdgeListParseError("missing vertex count line")

    vertex_names = None
    if names:
        for vertex, line_number in name_lines.items():
            if vertex >= n:
                raise EdgeListParseError(f"name given for vertex {vertex} outside 0..{n - 1}", line_number)
        vertex_names = [names.get(v, str(v)) for v in range(n)]

    logger.debug(f"Parsed edge list with {n} vertices and {len(edges)} edges")
    return Graph.from_edges(n, edges, vertex_names)


def serialize_edge_list(graph: Graph, with_names: bool = False) -> str:
    lines = []
    if with_names and graph.names is not None:
        lines.extend(f"{NAME_PREFIX}{v} {graph.name(v)}" for v in graph.vertices())
    lines.append(str(graph.n))
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"
