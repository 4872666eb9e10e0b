"""
Vertex labelings and the four domination predicates
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, NamedTuple, Tuple

from core.errors import LabelingError
from core.graph import Graph
from models import DominationVariant

logger = logging.getLogger(__name__)


class Violation(NamedTuple):
    vertex: int
    neighbor_sum: int


@dataclass(frozen=True)
class Labeling:
    """Total map from vertex ids 0..n-1 to {0, 1, 2}"""

    values: Tuple[int, ...]

    def __post_init__(self):
        for v, value in enumerate(self.values):
            if value not in (0, 1, 2):
                raise LabelingError(f"vertex {v} has label {value}; labels must be 0, 1 or 2")

    @classmethod
    def of(cls, values: Iterable[int]) -> "Labeling":
        return cls(tuple(int(x) for x in values))

    @classmethod
    def ones(cls, n: int) -> "Labeling":
        return cls((1,) * n)

    @classmethod
    def zeros(cls, n: int) -> "Labeling":
        return cls((0,) * n)

    @classmethod
    def parse(cls, text: str) -> "Labeling":
        """Parse comma-separated labels in vertex order, e.g. '1,0,1'"""
        tokens = [tok.strip() for tok in text.strip().split(",")]
        if tokens == [""]:
            return cls(())
        try:
            return cls(tuple(int(tok) for tok in tokens))
        except ValueError:
            raise LabelingError(f"cannot parse labeling '{text}'; expected comma-separated 0/1/2") from None

    @property
    def size(self) -> int:
        return len(self.values)

    def weight(self) -> int:
        return sum(self.values)

    def partition(self) -> Tuple[FrozenSet[int], FrozenSet[int], FrozenSet[int]]:
        """(V0, V1, V2): the preimages of 0, 1 and 2"""
        groups = ([], [], [])
        for v, value in enumerate(self.values):
            groups[value].append(v)
        return tuple(frozenset(group) for group in groups)

    def format(self) -> str:
        return ",".join(str(x) for x in self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    def __iter__(self):
        return iter(self.values)


def condition_met(variant: DominationVariant, neighbor_sum: int, twos: int) -> bool:
    """Whether a 0-labeled vertex with these neighbour totals is covered"""
    if variant is DominationVariant.PERFECT_ITALIAN:
        return neighbor_sum == 2
    if variant is DominationVariant.ITALIAN:
        return neighbor_sum >= 2
    if variant is DominationVariant.ROMAN:
        return twos > 0
    return neighbor_sum >= 1


def _check_compatible(graph: Graph, labeling: Labeling, variant: DominationVariant):
    if labeling.size != graph.n:
        raise LabelingError(f"labeling has {labeling.size} values but the graph has {graph.n} vertices")
    if variant is DominationVariant.DOMINATION and 2 in labeling.values:
        raise LabelingError("plain domination labelings use only 0 and 1")


def violations(graph: Graph, labeling: Labeling, variant: DominationVariant) -> List[Violation]:
    """0-labeled vertices failing the variant's condition, ascending by id"""
    _check_compatible(graph, labeling, variant)
    found = []
    values = labeling.values
    for v in graph.vertices():
        if values[v]:
            continue
        labels = [values[u] for u in graph.neighbors(v)]
        total = sum(labels)
        if not condition_met(variant, total, labels.count(2)):
            found.append(Violation(v, total))
    return found


def is_valid(graph: Graph, labeling: Labeling, variant: DominationVariant) -> bool:
    return not violations(graph, labeling, variant)
