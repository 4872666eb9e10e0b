"""
Closed-form perfect Italian domination numbers for named families
"""

import logging
from typing import Optional, Tuple

from core.errors import InvalidInputError, NoClosedFormError
from models import FamilyKind, FamilySpec, FormulaResult

logger = logging.getLogger(__name__)

# Citation tags reported with every value
FORMULA_SOURCES = {
    'path': "Thm 2.3: ceil((n+1)/2)",
    'cycle': "Thm 2.5: ceil(n/2)",
    'single-vertex': "Thm 5.2: K1 is 1 (Obs 3 needs m >= 2)",
    'complete': "Obs 3: complete graph 2",
    'edgeless': "Obs 1: edgeless graph n",
    'multipartite-one-part': "Obs 1: one part is edgeless, n",
    'multipartite-small-part': "Thm 2.6: smallest part 1 or 2, value 2",
    'complete-bipartite': "Obs 2: complete bipartite, parts >= 3, value 4",
    'complete-tripartite': "Thm 2.6: three parts >= 3, value 3",
    'multipartite-large-parts': "Thm 2.6: four or more parts >= 3, value n",
    'ladder': "Thm 4.3: P2 x Pn, n+1 for n in {1,3,5}, else n",
    'rook': "Thm 4.4: Km x Kn, n if m = n, else min(2m, 2n)",
}
ITALIAN_LADDER_SOURCE = "Thm 4.2: P2 x Pn italian, n"


def ladder_shape(spec: FamilySpec) -> Optional[Tuple[int, bool]]:
    """(n, transposed) when spec is P2 x Pn (transposed for Pn x P2)"""
    if spec.kind is not FamilyKind.PRODUCT:
        return None
    left, right = spec.left, spec.right
    if left.kind is not FamilyKind.PATH or right.kind is not FamilyKind.PATH:
        return None
    if left.size == 2:
        return right.size, False
    if right.size == 2:
        return left.size, True
    return None


def rook_shape(spec: FamilySpec) -> Optional[Tuple[int, int]]:
    if spec.kind is not FamilyKind.PRODUCT:
        return None
    if spec.left.kind is FamilyKind.COMPLETE and spec.right.kind is FamilyKind.COMPLETE:
        return spec.left.size, spec.right.size
    return None


def multipartite_parts(spec: FamilySpec) -> Optional[Tuple[int, ...]]:
    if spec.kind is FamilyKind.MULTIPARTITE:
        return spec.parts
    if spec.kind is FamilyKind.STAR:
        return (1, spec.size)
    return None


def _multipartite_value(parts: Tuple[int, ...]) -> Tuple[int, str]:
    # r = 1 first: a lone part is edgeless, so K_1 gets 1 rather than 2
    if len(parts) == 1:
        return parts[0], 'multipartite-one-part'
    if parts[0] <= 2:
        return 2, 'multipartite-small-part'
    if len(parts) == 2:
        return 4, 'complete-bipartite'
    if len(parts) == 3:
        return 3, 'complete-tripartite'
    return sum(parts), 'multipartite-large-parts'


def ladder_value(n: int) -> int:
    return n + 1 if n in (1, 3, 5) else n


def rook_value(m: int, n: int) -> int:
    return n if m == n else min(2 * m, 2 * n)


def pid_formula(spec: FamilySpec) -> FormulaResult:
    """Closed-form PID number of ``spec``; raises NoClosedFormError otherwise"""
    kind = spec.kind
    if kind is FamilyKind.PATH:
        value, tag = (spec.size + 2) // 2, 'path'
    elif kind is FamilyKind.CYCLE:
        value, tag = (spec.size + 1) // 2, 'cycle'
    elif kind is FamilyKind.COMPLETE:
        value, tag = (1, 'single-vertex') if spec.size == 1 else (2, 'complete')
    elif kind is FamilyKind.EMPTY:
        value, tag = spec.size, 'edgeless'
    elif multipartite_parts(spec) is not None:
        value, tag = _multipartite_value(multipartite_parts(spec))
    elif ladder_shape(spec) is not None:
        value, tag = ladder_value(ladder_shape(spec)[0]), 'ladder'
    elif rook_shape(spec) is not None:
        value, tag = rook_value(*rook_shape(spec)), 'rook'
    else:
        raise NoClosedFormError(f"no closed form for '{spec.describe()}'; use solve instead")
    logger.debug(f"Formula for {spec.describe()}: {value} ({tag})")
    return FormulaResult(value=value, source=FORMULA_SOURCES[tag])


def italian_formula_p2pn(n: int) -> int:
    """Italian domination number of P2 x Pn.

    P2 x P1 is K2, where a single 1 leaves the other vertex with sum 1,
    so n = 1 needs weight 2.
    """
    if n < 1:
        raise InvalidInputError(f"n must be positive, got {n}")
    return 2 if n == 1 else n
