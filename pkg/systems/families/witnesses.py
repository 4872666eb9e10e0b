"""
Explicit PID labelings achieving the closed forms
"""

import logging
from typing import List

from core.errors import CheckFailedError, NoClosedFormError
from core.generators import generate
from core.labeling import Labeling, violations
from models import DominationVariant, FamilyKind, FamilySpec
from systems.families.formulas import ladder_shape, multipartite_parts, pid_formula, rook_shape

logger = logging.getLogger(__name__)


def path_witness(n: int) -> List[int]:
    """1 on even ids, plus the last vertex when n is even"""
    values = [1 if v % 2 == 0 else 0 for v in range(n)]
    values[n - 1] = 1
    return values


def cycle_witness(n: int) -> List[int]:
    return [1 if v % 2 == 0 else 0 for v in range(n)]


def multipartite_witness(parts) -> List[int]:
    values = [0] * sum(parts)
    starts = [sum(parts[:i]) for i in range(len(parts))]
    if len(parts) == 1:
        return [1] * parts[0]
    if parts[0] == 1:
        values[0] = 2
    elif parts[0] == 2:
        values[0] = values[1] = 1
    elif len(parts) == 2:
        # two 1s on each side; every 0 sees exactly the other side's pair
        for start in starts:
            values[start] = values[start + 1] = 1
    elif len(parts) == 3:
        for start in starts:
            values[start] = 1
    else:
        values = [1] * sum(parts)
    return values


def ladder_rows(n: int) -> List[List[int]]:
    """Rows (u, v) of a weight-optimal labeling of P2 x Pn, column j = id j-1"""
    u = [0] * (n + 1)
    v = [0] * (n + 1)
    if n == 1:
        u[1] = v[1] = 1
    elif n == 3:
        u[1], v[2], v[3] = 1, 1, 2
    elif n == 5:
        u[1] = u[4] = v[2] = v[3] = 1
        u[5] = 2
    elif n % 2 == 0:
        for j in range(1, n + 1):
            if j % 4 in (0, 1):
                u[j] = 1
            else:
                v[j] = 1
    else:
        # mod-6 head on columns 1..7, then pairs alternating between the rows
        for j in range(1, n + 1):
            if j <= 7:
                if j % 6 == 4:
                    u[j] = 2
                elif j % 6 == 1:
                    u[j] = 1
                if j % 2 == 0:
                    v[j] = 1
            elif (j - 7) % 4 < 2:
                u[j] = 1
            else:
                v[j] = 1
    return [u[1:], v[1:]]


def _ladder_witness(n: int, transposed: bool) -> List[int]:
    rows = ladder_rows(n)
    if transposed:
        # Pn x P2 numbers (column, row) as column*2 + row
        return [rows[row][col] for col in range(n) for row in range(2)]
    return rows[0] + rows[1]


def _rook_witness(m: int, n: int) -> List[int]:
    values = [0] * (m * n)
    if m == n:
        for i in range(n):
            values[i * n + i] = 1
    elif m < n:
        for i in range(m):
            values[i * n] = 2
    else:
        for j in range(n):
            values[j] = 2
    return values


def pid_witness(spec: FamilySpec, check: bool = True) -> Labeling:
    """Valid PID labeling of ``generate(spec)`` with weight pid_formula(spec)"""
    kind = spec.kind
    if kind is FamilyKind.PATH:
        values = path_witness(spec.size)
    elif kind is FamilyKind.CYCLE:
        values = cycle_witness(spec.size)
    elif kind is FamilyKind.COMPLETE:
        values = [1] if spec.size == 1 else [1, 1] + [0] * (spec.size - 2)
    elif kind is FamilyKind.EMPTY:
        values = [1] * spec.size
    elif multipartite_parts(spec) is not None:
        values = multipartite_witness(multipartite_parts(spec))
    elif ladder_shape(spec) is not None:
        values = _ladder_witness(*ladder_shape(spec))
    elif rook_shape(spec) is not None:
        values = _rook_witness(*rook_shape(spec))
    else:
        raise NoClosedFormError(f"no witness construction for '{spec.describe()}'; use solve instead")

    labeling = Labeling.of(values)
    if check:
        expected = pid_formula(spec).value
        failures = violations(generate(spec), labeling, DominationVariant.PERFECT_ITALIAN)
        if failures or labeling.weight() != expected:
            logger.error(f"Witness for {spec.describe()} failed: weight={labeling.weight()} violations={failures}")
            raise CheckFailedError(f"witness construction for '{spec.describe()}' is not a valid optimum")
    return labeling
