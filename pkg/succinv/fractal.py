__all__ = ["FractalMode", "fractal_build", "fractal_type_id"]
from enum import Enum
from typing import List, Tuple

import networkx as nx

from succinv.cache import cache
from succinv.canonical import canonical_labeling
from succinv.errors import InputError, ResourceError
from succinv.gaifman import neighborhood
from succinv.registry import NeighborhoodType, canonical_type
from succinv.settings import settings
from succinv.structures import PointedStructure, Row, Structure


class FractalMode(str, Enum):
    both = "both"
    upper = "upper"
    lower = "lower"


class _Builder:
    def __init__(self, tau: PointedStructure):
        self.signature = tau.structure.signature
        self.size = 0
        self.rows: List[List[Row]] = [[] for _ in self.signature.relations]
        self.succ: List[Tuple[int, int]] = []

    def attach(self, p: PointedStructure, k: int, mode: FractalMode) -> int:
        offset = self.size
        self.size += p.structure.size
        if self.size > settings.fractal_element_budget:
            raise ResourceError(
                f"fractal build exceeds {settings.fractal_element_budget} elements"
            )
        for rows, table in zip(self.rows, p.structure.tables):
            rows.extend(tuple(offset + x for x in row) for row in sorted(table))
        if k == 0:
            return offset + p.center
        dist = nx.single_source_shortest_path_length(
            p.structure.sigma_graph, p.center, k - 1
        )
        for x in sorted(dist, key=lambda y: (dist[y], y)):
            radius = k - dist[x] - 1
            chi = neighborhood(p.structure, x, radius)
            if x != p.center or mode != FractalMode.lower:
                upper = self.attach(chi, radius, FractalMode.upper)
                self.succ.append((offset + x, upper))
            if x != p.center or mode != FractalMode.upper:
                lower = self.attach(chi, radius, FractalMode.lower)
                self.succ.append((lower, offset + x))
        return offset + p.center

    def structure(self) -> Structure:
        return Structure(
            self.signature,
            self.size,
            tuple(map(frozenset, self.rows)),
            frozenset(self.succ),
        )


def fractal_build(
    tau: PointedStructure, k: int, mode: FractalMode = FractalMode.both
) -> PointedStructure:
    """Fractal (``both``), upper or lower type of ``tau`` at radius ``k``.

    Every element at distance d < k of the center gets fresh S-successor and
    S-predecessor structures of its own (k-d-1)-type, recursively; the center
    gets them according to ``mode``. The result is canonically relabeled.
    """
    if tau.structure.succ:
        raise InputError("fractal types are built from Σ-neighborhoods only")
    reach = nx.single_source_shortest_path_length(
        tau.structure.sigma_graph, tau.center, k
    )
    if k > 0 and len(reach) != tau.structure.size:
        raise InputError(f"not a {k}-neighborhood of its center")
    builder = _Builder(tau)
    root = builder.attach(tau, k, FractalMode(mode))
    structure = builder.structure()
    _, labeling = canonical_labeling(structure, root)
    return PointedStructure(structure.relabel(labeling), labeling[root])


@cache
def fractal_type_id(
    tau: NeighborhoodType, k: int, mode: FractalMode = FractalMode.both
) -> NeighborhoodType:
    if tau.over_succ:
        raise InputError("fractal types are built from Σ-types only")
    if tau.radius < k:
        raise InputError(f"type of radius {tau.radius} has no radius-{k} fractal")
    if tau.representative is None:
        raise InputError("type without representative")
    rep = tau.representative
    if tau.radius > k:
        rep = neighborhood(rep.structure, rep.center, k)
    return canonical_type(fractal_build(rep, k, mode), k, over_succ=True)
