__all__ = ["Classification", "classify_types"]
import logging
from dataclasses import dataclass
from typing import Callable, FrozenSet, Optional, Tuple

from succinv.errors import InputError, SimilarityError
from succinv.registry import NeighborhoodType, TypeCensus

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Classification:
    rare: FrozenSet[NeighborhoodType]
    frequent: Tuple[NeighborhoodType, ...]
    beta: int
    binding_bound: Optional[str] = None

    @property
    def all_rare(self) -> bool:
        return not self.frequent

    def frequent_index(self, tp: NeighborhoodType) -> Optional[int]:
        try:
            return self.frequent.index(tp)
        except ValueError:
            return None


def classify_types(
    census1: TypeCensus, census2: TypeCensus, g: Callable[[int], int]
) -> Classification:
    """Split the types of ``census1`` into rare and frequent ones.

    Types are visited by increasing count (ties by id); the first type with at
    least g(beta) occurrences, beta counting the occurrences seen so far, and
    every type after it are frequent.
    """
    if census1.radius != census2.radius:
        raise InputError(f"censuses at radius {census1.radius} and {census2.radius}")
    ordered = sorted(census1.counts, key=lambda c: (c[1], c[0].id))
    beta, i = 0, 0
    while i < len(ordered) and ordered[i][1] < g(beta):
        beta += ordered[i][1]
        i += 1
    rare, frequent = ordered[:i], ordered[i:]
    counts2 = dict(census2.counts)
    unknown = counts2.keys() - dict(census1.counts).keys()
    if unknown:
        raise SimilarityError(
            f"types {sorted(map(str, unknown))} occur only in the second structure"
        )
    for tp, count in rare:
        if counts2.get(tp, 0) != count:
            raise SimilarityError(
                f"rare type {tp} occurs {count} times in the first structure and "
                f"{counts2.get(tp, 0)} times in the second"
            )
    least = g(beta)
    for tp, _ in frequent:
        if counts2.get(tp, 0) < least:
            raise SimilarityError(
                f"frequent type {tp} occurs {counts2.get(tp, 0)} < {least} times "
                "in the second structure"
            )
    logger.info(
        "%d rare types (%d occurrences), %d frequent types",
        len(rare),
        beta,
        len(frequent),
    )
    return Classification(
        frozenset(tp for tp, _ in rare), tuple(tp for tp, _ in frequent), beta
    )
