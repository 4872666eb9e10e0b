"""
Realization gadgets: graphs with prescribed domination values
"""

import logging
from typing import Optional, Tuple

from config import get_settings
from core.errors import InvalidInputError, UnsupportedPairError
from core.graph import Graph, GraphBuilder, join
from core.generators import generate
from models import ConstructionKind, ConstructionSpec, FamilySpec, GadgetLayout, Realization

logger = logging.getLogger(__name__)

JOIN_HEADS = ('k1', 'k2', '2k1')


def _names(prefix: str, count: int, start: int = 1):
    return [f"{prefix}_{i}" for i in range(start, start + count)]


def _build_induced(spec: ConstructionSpec) -> Realization:
    a, b = spec.a, spec.b
    builder = GraphBuilder()
    if b <= a:
        path = builder.add_vertices(_names("v", 2 * a - 1))
        builder.add_path(path)
        return Realization(spec, builder.freeze(), tuple(path[:2 * b - 1]))

    path = builder.add_vertices(_names("v", 2 * b - 1))
    builder.add_path(path)
    u = builder.add_vertex("u")
    v = builder.add_vertex("v")
    # u and v both see v_{2a-3}..v_{2b-1}; v_{2a-4} sees v only
    tail = path[2 * a - 4:]
    builder.connect(u, tail)
    builder.connect(v, tail)
    builder.add_edge(v, path[2 * a - 5])
    return Realization(spec, builder.freeze(), tuple(path))


def _build_base(spec: ConstructionSpec) -> Realization:
    odd = spec.kind is ConstructionKind.ROMAN_PID_ODD_BASE
    stated = spec.layout is GadgetLayout.STATED
    base_b = spec.b - 2 * spec.k
    length = base_b - 3 if odd or not stated else base_b - 4
    if length < 1:
        raise UnsupportedPairError(f"{spec.describe()}: the base path would be empty")

    builder = GraphBuilder()
    independent = builder.add_vertices(_names("x", spec.p))
    path = builder.add_vertices(_names("w", length))
    builder.add_path(path)
    if stated:
        for x in independent:
            builder.connect(x, path)
    u = builder.add_vertex("u")
    builder.connect(u, independent + path)

    end = path[-1]
    if odd:
        pendant = builder.add_vertex("v")
        builder.add_edge(pendant, end)
    else:
        s1, s2 = builder.add_vertices(["s_1", "s_2"])
        builder.add_edge(s1, s2)
        builder.add_edge(s1, end)
        builder.add_edge(s2, end)

    previous = u
    for i in range(1, spec.k + 1):
        chain = builder.add_vertices(_names(f"c{i}", 3))
        builder.add_edge(previous, chain[0])
        builder.add_path(chain)
        previous = chain[-1]
    return Realization(spec, builder.freeze())


def _build_hub(spec: ConstructionSpec) -> Realization:
    builder = GraphBuilder()
    path = builder.add_vertices(_names("v", 2 * spec.a - 1))
    builder.add_path(path)
    hub = builder.add_vertex("u")
    builder.connect(hub, [path[0]] + path[1:-1:2] + [path[-1]])
    return Realization(spec, builder.freeze())


def _build_pairs(spec: ConstructionSpec) -> Realization:
    b = spec.b
    builder = GraphBuilder()
    independent = builder.add_vertices(_names("v", b))
    if spec.layout is GadgetLayout.CORRECTED:
        # two pair-vertices per pair; pairs inside v_1..v_{deleted+1} are dropped
        span = spec.deleted + 1
        for j in range(b):
            for i in range(j):
                if j < span:
                    continue
                for mark in ("", "'"):
                    w = builder.add_vertex(f"u_{i + 1},{j + 1}{mark}")
                    builder.add_edge(independent[i], w)
                    builder.add_edge(independent[j], w)
    else:
        skipped = 0
        for i in range(b):
            for j in range(i + 1, b):
                if skipped < spec.deleted:
                    skipped += 1
                    continue
                w = builder.add_vertex(f"u_{i + 1},{j + 1}")
                builder.add_edge(independent[i], w)
                builder.add_edge(independent[j], w)
    return Realization(spec, builder.freeze())


BUILDERS = {
    ConstructionKind.INDUCED_PAIR: _build_induced,
    ConstructionKind.ROMAN_PID_ODD_BASE: _build_base,
    ConstructionKind.ROMAN_PID_EVEN_BASE: _build_base,
    ConstructionKind.ROMAN_PID_EQUAL_ODD: _build_hub,
    ConstructionKind.ROMAN_PID_PAIR_GADGET: _build_pairs,
}


def build(spec: ConstructionSpec) -> Realization:
    realization = BUILDERS[spec.kind](spec)
    logger.info(f"Built {spec.describe()} on {realization.graph.n} vertices")
    return realization


def realize_induced(a: int, b: int) -> Tuple[Graph, Tuple[int, ...]]:
    """Graph with PID number a holding an induced subgraph with PID number b"""
    realization = build(ConstructionSpec(ConstructionKind.INDUCED_PAIR, a, b))
    return realization.graph, realization.h_vertices


def default_p(b: int, layout: GadgetLayout) -> int:
    configured = get_settings().default_p
    if configured is not None:
        return configured
    return max(3, b - 3) if layout is GadgetLayout.CORRECTED else 3


def plan_roman_vs_pid(
    a: int, b: int, p: Optional[int] = None, layout: GadgetLayout = GadgetLayout.CORRECTED
) -> ConstructionSpec:
    """Choose the gadget whose Roman number is a and PID number is b"""
    if a < 3 or b < 3:
        raise UnsupportedPairError(f"(a={a}, b={b}): constructions start at a, b >= 3")
    if a > 2 * b - 1:
        raise UnsupportedPairError(f"(a={a}, b={b}): no graph has Roman number above 2b-1 = {2 * b - 1}")

    if a < b:
        p = p if p is not None else default_p(b, layout)
        if a % 2 == 1:
            return ConstructionSpec(ConstructionKind.ROMAN_PID_ODD_BASE, a, b, p=p, k=(a - 3) // 2, layout=layout)
        return ConstructionSpec(ConstructionKind.ROMAN_PID_EVEN_BASE, a, b, p=p, k=(a - 4) // 2, layout=layout)
    if a == b and a % 2 == 1:
        return ConstructionSpec(ConstructionKind.ROMAN_PID_EQUAL_ODD, a, b, layout=layout)
    if a == b and layout is GadgetLayout.STATED:
        raise UnsupportedPairError(f"(a={a}, b={b}): the stated constructions leave a = b even uncovered")
    return ConstructionSpec(ConstructionKind.ROMAN_PID_PAIR_GADGET, a, b, deleted=2 * b - 1 - a, layout=layout)


def realize_roman_vs_pid(
    a: int, b: int, p: Optional[int] = None, layout: GadgetLayout = GadgetLayout.CORRECTED
) -> Graph:
    """Graph with Roman domination number a and PID number b (3 <= a <= 2b-1)"""
    return build(plan_roman_vs_pid(a, b, p, layout)).graph


def join_structure_graph(head: str, tail: Graph) -> Graph:
    """K1, K2 or 2K1 joined to ``tail``"""
    key = head.lower()
    if key not in JOIN_HEADS:
        raise InvalidInputError(f"join head must be one of {', '.join(JOIN_HEADS)}, got '{head}'")
    if key == 'k1':
        head_graph = generate(FamilySpec.complete(1))
    elif key == 'k2':
        head_graph = generate(FamilySpec.complete(2))
    else:
        head_graph = generate(FamilySpec.empty(2))
    return join(head_graph, tail)
