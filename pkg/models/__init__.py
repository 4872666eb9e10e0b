"""
Data models for pidom
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from math import comb
from typing import TYPE_CHECKING, Dict, List, Optional, Tuple

from core.errors import InvalidInputError

if TYPE_CHECKING:
    from core.graph import Graph
    from core.labeling import Labeling


class DominationVariant(str, Enum):
    """Which neighbour condition a 0-labeled vertex must meet"""

    PERFECT_ITALIAN = "pid"
    ITALIAN = "italian"
    ROMAN = "roman"
    DOMINATION = "domination"

    @property
    def max_label(self) -> int:
        return 1 if self is DominationVariant.DOMINATION else 2

    @classmethod
    def parse(cls, text: str) -> "DominationVariant":
        key = text.strip().lower().replace("_", "-")
        aliases = {
            "pid": cls.PERFECT_ITALIAN,
            "perfect-italian": cls.PERFECT_ITALIAN,
            "italian": cls.ITALIAN,
            "roman": cls.ROMAN,
            "domination": cls.DOMINATION,
            "dom": cls.DOMINATION,
        }
        if key not in aliases:
            raise InvalidInputError(f"unknown variant '{text}'")
        return aliases[key]


class SearchOrder(str, Enum):
    """Vertex assignment order for the branch-and-bound search"""

    IDENTITY = "identity"
    DEGREE = "degree"


class FamilyKind(str, Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    EMPTY = "empty"
    STAR = "star"
    MULTIPARTITE = "multipartite"
    PRODUCT = "product"


_SIZED_KINDS = {FamilyKind.PATH, FamilyKind.CYCLE, FamilyKind.COMPLETE, FamilyKind.EMPTY, FamilyKind.STAR}


@dataclass(frozen=True)
class FamilySpec:
    """Symbolic description of a named graph family member"""

    kind: FamilyKind
    size: int = 0
    parts: Tuple[int, ...] = ()
    left: Optional[FamilySpec] = None
    right: Optional[FamilySpec] = None

    def __post_init__(self):
        if self.kind in _SIZED_KINDS:
            if self.size < 1:
                raise InvalidInputError(f"{self.kind.value} size must be at least 1, got {self.size}")
            if self.kind is FamilyKind.CYCLE and self.size < 3:
                raise InvalidInputError(f"cycle needs at least 3 vertices, got {self.size}")
        elif self.kind is FamilyKind.MULTIPARTITE:
            if not self.parts:
                raise InvalidInputError("multipartite spec needs at least one part")
            if any(part < 1 for part in self.parts):
                raise InvalidInputError(f"multipartite parts must be positive, got {list(self.parts)}")
            if list(self.parts) != sorted(self.parts):
                raise InvalidInputError(f"multipartite parts must be nondecreasing, got {list(self.parts)}")
        elif self.kind is FamilyKind.PRODUCT:
            if self.left is None or self.right is None:
                raise InvalidInputError("product spec needs two factors")

    @classmethod
    def path(cls, n: int) -> FamilySpec:
        return cls(FamilyKind.PATH, size=n)

    @classmethod
    def cycle(cls, n: int) -> FamilySpec:
        return cls(FamilyKind.CYCLE, size=n)

    @classmethod
    def complete(cls, n: int) -> FamilySpec:
        return cls(FamilyKind.COMPLETE, size=n)

    @classmethod
    def empty(cls, n: int) -> FamilySpec:
        return cls(FamilyKind.EMPTY, size=n)

    @classmethod
    def star(cls, n: int) -> FamilySpec:
        """K_{1,n}: one centre and n leaves"""
        return cls(FamilyKind.STAR, size=n)

    @classmethod
    def multipartite(cls, parts) -> FamilySpec:
        return cls(FamilyKind.MULTIPARTITE, parts=tuple(sorted(int(p) for p in parts)))

    @classmethod
    def product(cls, left: FamilySpec, right: FamilySpec) -> FamilySpec:
        return cls(FamilyKind.PRODUCT, left=left, right=right)

    @classmethod
    def ladder(cls, n: int) -> FamilySpec:
        return cls.product(cls.path(2), cls.path(n))

    @classmethod
    def rook(cls, m: int, n: int) -> FamilySpec:
        return cls.product(cls.complete(m), cls.complete(n))

    @property
    def vertex_count(self) -> int:
        if self.kind is FamilyKind.STAR:
            return self.size + 1
        if self.kind is FamilyKind.MULTIPARTITE:
            return sum(self.parts)
        if self.kind is FamilyKind.PRODUCT:
            return self.left.vertex_count * self.right.vertex_count
        return self.size

    def describe(self) -> str:
        if self.kind is FamilyKind.MULTIPARTITE:
            return "multipartite:" + ",".join(str(p) for p in self.parts)
        if self.kind is FamilyKind.PRODUCT:
            return f"{self.left.describe()}*{self.right.describe()}"
        return f"{self.kind.value}:{self.size}"

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """Parse 'path:5', 'multipartite:3,3,4' or factors joined by '*'"""
        text = text.strip()
        if not text:
            raise InvalidInputError("empty family spec")
        factors = [piece.strip() for piece in text.split("*")]
        spec = cls._parse_factor(factors[0])
        for piece in factors[1:]:
            spec = cls.product(spec, cls._parse_factor(piece))
        return spec

    @classmethod
    def _parse_factor(cls, text: str) -> FamilySpec:
        match = re.fullmatch(r"([a-z]+)\s*:\s*([0-9,\s]+)", text.lower())
        if not match:
            raise InvalidInputError(f"cannot parse family spec '{text}' (expected e.g. 'path:5')")
        name, args = match.group(1), match.group(2)
        try:
            kind = FamilyKind(name)
        except ValueError:
            raise InvalidInputError(f"unknown family '{name}'") from None
        numbers = [int(tok) for tok in args.replace(" ", "").split(",") if tok]
        if kind is FamilyKind.MULTIPARTITE:
            return cls.multipartite(numbers)
        if kind is FamilyKind.PRODUCT or len(numbers) != 1:
            raise InvalidInputError(f"family '{name}' takes exactly one size, got '{args}'")
        return cls(kind, size=numbers[0])


class ConstructionKind(str, Enum):
    INDUCED_PAIR = "induced-pair"
    ROMAN_PID_ODD_BASE = "odd-base"
    ROMAN_PID_EVEN_BASE = "even-base"
    ROMAN_PID_EQUAL_ODD = "equal-odd"
    ROMAN_PID_PAIR_GADGET = "pair-gadget"


class GadgetLayout(str, Enum):
    """CORRECTED is exact under the solver; STATED keeps the literal constructions"""

    CORRECTED = "corrected"
    STATED = "stated"


@dataclass(frozen=True)
class ConstructionSpec:
    """Parameters of one realization gadget.

    ``a`` and ``b`` are the target values. ``p`` sizes the independent side of
    the base gadgets, ``k`` counts the chained P3 attachments and ``deleted``
    is the pair-gadget reduction (see GadgetLayout).
    """

    kind: ConstructionKind
    a: int
    b: int
    p: int = 0
    k: int = 0
    deleted: int = 0
    layout: GadgetLayout = GadgetLayout.CORRECTED

    def __post_init__(self):
        a, b = self.a, self.b
        kind = self.kind
        if kind is ConstructionKind.INDUCED_PAIR:
            self._require(a >= 3 and b >= 3, "induced pair needs a, b >= 3")
        elif kind is ConstructionKind.ROMAN_PID_ODD_BASE:
            self._require(a >= 3 and a % 2 == 1, "odd base needs odd a >= 3")
            self._require(b >= a + 1, "odd base needs b > a")
            self._require(self.p >= 1, "odd base needs p >= 1")
            self._require(self.k == (a - 3) // 2, f"odd base with a={a} needs k={(a - 3) // 2}")
        elif kind is ConstructionKind.ROMAN_PID_EVEN_BASE:
            self._require(a >= 4 and a % 2 == 0, "even base needs even a >= 4")
            self._require(b >= a + 1, "even base needs b > a")
            self._require(self.p >= 1, "even base needs p >= 1")
            self._require(self.k == (a - 4) // 2, f"even base with a={a} needs k={(a - 4) // 2}")
        elif kind is ConstructionKind.ROMAN_PID_EQUAL_ODD:
            self._require(a >= 3 and a % 2 == 1 and b == a, "hub graph needs a = b odd >= 3")
        elif kind is ConstructionKind.ROMAN_PID_PAIR_GADGET:
            self._require(b >= 3, "pair gadget needs b >= 3")
            top = b - 1 if self.layout is GadgetLayout.CORRECTED else min(b - 2, comb(b, 2) - 1)
            self._require(0 <= self.deleted <= top, f"pair gadget with b={b} allows 0..{top} deletions")
            self._require(a == 2 * b - 1 - self.deleted, f"pair gadget with b={b} and {self.deleted} deletions targets a={2 * b - 1 - self.deleted}")

    def _require(self, condition: bool, message: str):
        if not condition:
            raise InvalidInputError(f"{self.kind.value}: {message}")

    def describe(self) -> str:
        extras = []
        if self.kind in (ConstructionKind.ROMAN_PID_ODD_BASE, ConstructionKind.ROMAN_PID_EVEN_BASE):
            extras.append(f"p={self.p} k={self.k}")
        if self.kind is ConstructionKind.ROMAN_PID_PAIR_GADGET:
            extras.append(f"deleted={self.deleted}")
        if self.kind is not ConstructionKind.INDUCED_PAIR:
            extras.append(f"layout={self.layout.value}")
        return " ".join([f"{self.kind.value} a={self.a} b={self.b}"] + extras)


@dataclass
class SolveResult:
    """Optimum of one variant plus the deterministic witness"""

    variant: DominationVariant
    optimum: int
    witness: Labeling
    nodes_explored: int
    order: SearchOrder = SearchOrder.IDENTITY


@dataclass
class EnumerationResult:
    """Every optimal labeling up to a cap"""

    variant: DominationVariant
    optimum: int
    labelings: List[Labeling]
    truncated: bool
    cap: int
    nodes_explored: int = 0


@dataclass(frozen=True)
class FormulaResult:
    value: int
    source: str


@dataclass
class ProductBound:
    """Upper bound on a product's PID number with the replicated witness"""

    bound: int
    witness: Labeling
    replicated_factor: str  # 'g' or 'h'


@dataclass
class VariantProfile:
    """All four domination numbers of one graph"""

    vertices: int
    domination: int
    italian: int
    roman: int
    perfect_italian: int

    @property
    def chain_holds(self) -> bool:
        return self.domination <= self.italian <= self.perfect_italian

    @property
    def roman_bound_holds(self) -> bool:
        return self.roman <= 2 * self.perfect_italian - 1

    def as_dict(self) -> Dict[str, int]:
        return {
            DominationVariant.DOMINATION.value: self.domination,
            DominationVariant.ITALIAN.value: self.italian,
            DominationVariant.ROMAN.value: self.roman,
            DominationVariant.PERFECT_ITALIAN.value: self.perfect_italian,
        }


@dataclass
class Realization:
    """A built gadget; ``h_vertices`` is only set for induced pairs"""

    spec: ConstructionSpec
    graph: Graph
    h_vertices: Optional[Tuple[int, ...]] = None


@dataclass
class RealizationCheck:
    """Solver measurements on a built gadget against its targets"""

    spec: ConstructionSpec
    vertices: int
    expected: Tuple[int, int]
    measured: Tuple[int, int]
    roman_bound_holds: bool = True
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.expected == self.measured and self.roman_bound_holds


@dataclass
class SweepRun:
    """One recorded table sweep"""

    run_id: int
    sweep: str
    parameters: str
    started_at: str
    passed: bool
    row_count: int
