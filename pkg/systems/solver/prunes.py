"""
Prune rules for the labeling search, one per domination variant
"""

from abc import ABC, abstractmethod
from typing import Dict

from models import DominationVariant


class PruneRule(ABC):
    """Decides when a partial labeling can no longer lead to a better one"""

    variant: DominationVariant
    # True when an already-assigned neighbour sum can become too large
    bounded_above = False

    def exceeds_incumbent(self, weight: int, best: int, seeded: bool) -> bool:
        """Weight bound; a seeded incumbent was never found by the search, so ties survive"""
        return weight > best if seeded else weight >= best

    @abstractmethod
    def closed_ok(self, neighbor_sum: int, twos: int) -> bool:
        """Condition for a 0-vertex whose whole neighbourhood is assigned"""

    def overshoot(self, neighbor_sum: int) -> bool:
        return False


class PerfectItalianRule(PruneRule):
    variant = DominationVariant.PERFECT_ITALIAN
    bounded_above = True

    def closed_ok(self, neighbor_sum: int, twos: int) -> bool:
        return neighbor_sum == 2

    def overshoot(self, neighbor_sum: int) -> bool:
        return neighbor_sum > 2


class ItalianRule(PruneRule):
    variant = DominationVariant.ITALIAN

    def closed_ok(self, neighbor_sum: int, twos: int) -> bool:
        return neighbor_sum >= 2


class RomanRule(PruneRule):
    variant = DominationVariant.ROMAN

    def closed_ok(self, neighbor_sum: int, twos: int) -> bool:
        return twos > 0


class DominationRule(PruneRule):
    variant = DominationVariant.DOMINATION

    def closed_ok(self, neighbor_sum: int, twos: int) -> bool:
        return neighbor_sum >= 1


PRUNE_RULES: Dict[DominationVariant, PruneRule] = {
    rule.variant: rule
    for rule in (PerfectItalianRule(), ItalianRule(), RomanRule(), DominationRule())
}


def rule_for(variant: DominationVariant) -> PruneRule:
    return PRUNE_RULES[variant]
