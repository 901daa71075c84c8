__all__ = [
    "NeighborhoodType",
    "TypeCensus",
    "canonical_type",
    "element_types",
    "threshold_equivalent",
    "type_census",
]
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

import networkx as nx

from succinv.cache import cache
from succinv.canonical import canonical_token
from succinv.errors import InputError
from succinv.gaifman import neighborhood
from succinv.structures import PointedStructure, Structure


@dataclass(frozen=True)
class NeighborhoodType:
    id: bytes
    radius: int
    over_succ: bool
    representative: Optional[PointedStructure] = field(
        default=None, compare=False, hash=False, repr=False
    )

    @property
    def hex(self) -> str:
        return self.id.hex()

    def __str__(self):
        return self.hex[:12]


@dataclass(frozen=True)
class TypeCensus:
    radius: int
    counts: Tuple[Tuple[NeighborhoodType, int], ...]
    total: int

    def count(self, tp: NeighborhoodType) -> int:
        return dict(self.counts).get(tp, 0)

    def as_dict(self) -> Dict[str, int]:
        return {tp.hex: n for tp, n in sorted(self.counts, key=lambda c: c[0].id)}


def canonical_type(
    p: PointedStructure, radius: Optional[int] = None, over_succ: Optional[bool] = None
) -> NeighborhoodType:
    structure = p.structure
    if radius is None:
        lengths = nx.single_source_shortest_path_length(
            structure.full_graph, p.center
        )
        radius = max(lengths.values())
    if over_succ is None:
        over_succ = structure.succ is not None
    return NeighborhoodType(
        canonical_token(structure, p.center), radius, over_succ, p
    )


@cache
def element_types(
    s: Structure, r: int, include_succ: bool = False
) -> Tuple[NeighborhoodType, ...]:
    return tuple(
        canonical_type(neighborhood(s, x, r, include_succ), r, include_succ)
        for x in s.universe
    )


@cache
def type_census(s: Structure, r: int, include_succ: bool = False) -> TypeCensus:
    counter = Counter(element_types(s, r, include_succ))
    counts = tuple(sorted(counter.items(), key=lambda c: c[0].id))
    return TypeCensus(r, counts, s.size)


def threshold_equivalent(c1: TypeCensus, c2: TypeCensus, t: int) -> bool:
    if c1.radius != c2.radius:
        raise InputError(f"censuses at radius {c1.radius} and {c2.radius}")
    counts1, counts2 = dict(c1.counts), dict(c2.counts)
    for tp in counts1.keys() | counts2.keys():
        n1, n2 = counts1.get(tp, 0), counts2.get(tp, 0)
        if n1 != n2 and not (n1 > t and n2 > t):
            return False
    return True
