"""
Upper bound for the PID number of a Cartesian product
"""

import logging
from typing import Optional

from core.errors import InvalidInputError
from core.graph import Graph
from core.labeling import Labeling, is_valid
from models import DominationVariant, ProductBound
from systems.solver.search import solve

logger = logging.getLogger(__name__)


def _factor_witness(graph: Graph, pid: Optional[int], witness: Optional[Labeling], label: str) -> Labeling:
    if witness is None:
        witness = solve(graph, DominationVariant.PERFECT_ITALIAN).witness
    elif not is_valid(graph, witness, DominationVariant.PERFECT_ITALIAN):
        raise InvalidInputError(f"witness for {label} is not a valid PID labeling")
    if pid is not None and witness.weight() != pid:
        raise InvalidInputError(f"{label}pid={pid} does not match the optimum {witness.weight()}")
    return witness


def product_upper_bound(
    g: Graph,
    h: Graph,
    gpid: Optional[int] = None,
    hpid: Optional[int] = None,
    g_witness: Optional[Labeling] = None,
    h_witness: Optional[Labeling] = None,
) -> ProductBound:
    """min(|V(h)|*gpid, |V(g)|*hpid) with a witness copying one factor's optimum.

    A missing PID number or witness is computed with the solver. The
    witness on g x h is f(u, v) = g(u) when the g side gives the smaller
    bound, else f(u, v) = h(v).
    """
    g_witness = _factor_witness(g, gpid, g_witness, "g")
    h_witness = _factor_witness(h, hpid, h_witness, "h")
    gpid, hpid = g_witness.weight(), h_witness.weight()

    by_g = h.n * gpid
    by_h = g.n * hpid
    if by_g <= by_h:
        values = [g_witness[u] for u in g.vertices() for _ in h.vertices()]
        bound, factor = by_g, 'g'
    else:
        values = [h_witness[v] for _ in g.vertices() for v in h.vertices()]
        bound, factor = by_h, 'h'
    logger.debug(f"Product bound min({by_g}, {by_h}) = {bound} from factor {factor}")
    return ProductBound(bound=bound, witness=Labeling.of(values), replicated_factor=factor)
