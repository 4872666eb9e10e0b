"""
Exact branch-and-bound search over vertex labelings
"""

import logging
from typing import List, Optional, Tuple

from config import get_settings
from core.errors import GraphError, InvalidInputError, SizeGuardError
from core.graph import Graph
from core.labeling import Labeling
from models import DominationVariant, EnumerationResult, SearchOrder, SolveResult, VariantProfile
from systems.solver.prunes import rule_for
from utils.solve_monitor import track_solve

logger = logging.getLogger(__name__)


class BranchAndBoundSolver:
    """Depth-first search assigning one vertex per level, values 0 < 1 < 2.

    Neighbour sums and 2-counts are kept incrementally. A vertex's condition
    is checked at the level where the last member of its closed
    neighbourhood is assigned, so every leaf is a valid labeling.
    """

    def __init__(self, graph: Graph, variant: DominationVariant, order: SearchOrder = SearchOrder.IDENTITY):
        self.graph = graph
        self.variant = variant
        self.order_mode = order
        self.rule = rule_for(variant)
        n = graph.n
        if order is SearchOrder.DEGREE:
            self.order = sorted(range(n), key=lambda v: (-graph.degree(v), v))
        else:
            self.order = list(range(n))
        position = [0] * n
        for k, v in enumerate(self.order):
            position[v] = k
        self.closing: List[List[int]] = [[] for _ in range(n)]
        for v in range(n):
            last = max([position[v]] + [position[u] for u in graph.neighbors(v)])
            self.closing[last].append(v)
        self.nodes_explored = 0

    def _run(self, bound: int, seeded: bool, collect_at: Optional[int] = None, cap: int = 0):
        """Shared DFS. With ``collect_at`` set it gathers every leaf of that
        weight (up to cap + 1) instead of tightening the bound."""
        graph = self.graph
        rule = self.rule
        order = self.order
        closing = self.closing
        neighbors = [graph.neighbors(v) for v in graph.vertices()]
        n = graph.n
        max_label = self.variant.max_label
        bounded_above = rule.bounded_above

        labels = [-1] * n
        sums = [0] * n
        twos = [0] * n
        state = {'best': bound, 'seeded': seeded, 'witness': None, 'found': [], 'stop': False}

        def feasible(k: int, x: int, value: int) -> bool:
            for v in closing[k]:
                if labels[v] == 0 and not rule.closed_ok(sums[v], twos[v]):
                    return False
            if bounded_above:
                if value == 0 and rule.overshoot(sums[x]):
                    return False
                if value:
                    for y in neighbors[x]:
                        if labels[y] == 0 and rule.overshoot(sums[y]):
                            return False
            return True

        def dfs(k: int, weight: int):
            self.nodes_explored += 1
            if k == n:
                if collect_at is None:
                    state['best'] = weight
                    state['seeded'] = False
                    state['witness'] = tuple(labels)
                    logger.debug(f"Incumbent improved to {weight} after {self.nodes_explored} nodes")
                elif weight == collect_at:
                    state['found'].append(tuple(labels))
                    if len(state['found']) > cap:
                        state['stop'] = True
                return
            x = order[k]
            for value in range(max_label + 1):
                if collect_at is None:
                    if rule.exceeds_incumbent(weight + value, state['best'], state['seeded']):
                        break
                elif weight + value > collect_at:
                    break
                labels[x] = value
                if value:
                    for y in neighbors[x]:
                        sums[y] += value
                        if value == 2:
                            twos[y] += 1
                if feasible(k, x, value):
                    dfs(k + 1, weight + value)
                if value:
                    for y in neighbors[x]:
                        sums[y] -= value
                        if value == 2:
                            twos[y] -= 1
                if state['stop']:
                    break
            labels[x] = -1

        dfs(0, 0)
        return state

    def solve(self) -> SolveResult:
        n = self.graph.n
        # the all-ones labeling is valid for every variant
        state = self._run(bound=n, seeded=True)
        witness = state['witness'] if state['witness'] is not None else (1,) * n
        return SolveResult(
            variant=self.variant,
            optimum=sum(witness),
            witness=Labeling(witness),
            nodes_explored=self.nodes_explored,
            order=self.order_mode,
        )

    def enumerate(self, optimum: int, cap: int) -> Tuple[List[Labeling], bool]:
        state = self._run(bound=optimum, seeded=True, collect_at=optimum, cap=cap)
        found = state['found']
        truncated = len(found) > cap
        return [Labeling(values) for values in found[:cap]], truncated


def _guard(graph: Graph, max_vertices: Optional[int], force: bool):
    if graph.n == 0:
        raise GraphError("cannot solve the empty graph")
    limit = max_vertices if max_vertices is not None else get_settings().max_vertices
    if graph.n > limit:
        if not force:
            raise SizeGuardError(graph.n, limit)
        logger.warning(f"Searching a {graph.n}-vertex graph above the guard of {limit}")


@track_solve
def solve(
    graph: Graph,
    variant: DominationVariant = DominationVariant.PERFECT_ITALIAN,
    order: SearchOrder = SearchOrder.IDENTITY,
    max_vertices: Optional[int] = None,
    force: bool = False,
) -> SolveResult:
    """Exact minimum weight of a valid labeling and the least optimal witness"""
    _guard(graph, max_vertices, force)
    result = BranchAndBoundSolver(graph, variant, order).solve()
    logger.info(
        f"Solved {variant.value} on {graph.n} vertices: optimum={result.optimum} nodes={result.nodes_explored}"
    )
    return result


@track_solve
def enumerate_optima(
    graph: Graph,
    variant: DominationVariant = DominationVariant.PERFECT_ITALIAN,
    cap: Optional[int] = None,
    optimum: Optional[int] = None,
    max_vertices: Optional[int] = None,
    force: bool = False,
) -> EnumerationResult:
    """All optimal labelings in lexicographic order, at most ``cap`` of them"""
    _guard(graph, max_vertices, force)
    if cap is None:
        cap = get_settings().enumerate_cap
    if cap < 1:
        raise InvalidInputError(f"cap must be positive, got {cap}")
    if optimum is None:
        optimum = BranchAndBoundSolver(graph, variant).solve().optimum
    solver = BranchAndBoundSolver(graph, variant)
    labelings, truncated = solver.enumerate(optimum, cap)
    if truncated:
        logger.warning(f"Enumeration of {variant.value} optima truncated at {cap}")
    return EnumerationResult(
        variant=variant,
        optimum=optimum,
        labelings=labelings,
        truncated=truncated,
        cap=cap,
        nodes_explored=solver.nodes_explored,
    )


def profile(graph: Graph, max_vertices: Optional[int] = None, force: bool = False) -> VariantProfile:
    """All four domination numbers of ``graph``"""
    values = {
        variant: solve(graph, variant, max_vertices=max_vertices, force=force).optimum
        for variant in DominationVariant
    }
    return VariantProfile(
        vertices=graph.n,
        domination=values[DominationVariant.DOMINATION],
        italian=values[DominationVariant.ITALIAN],
        roman=values[DominationVariant.ROMAN],
        perfect_italian=values[DominationVariant.PERFECT_ITALIAN],
    )
