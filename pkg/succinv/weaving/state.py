__all__ = ["BuilderState", "pick_far", "s_star"]
import logging
from dataclasses import dataclass, field
from typing import Collection, Dict, Iterable, List, Optional, Set, Tuple

import networkx as nx

from succinv.errors import ContractViolation, InfeasibilityError
from succinv.layering import short_cycle_through_s
from succinv.registry import NeighborhoodType, element_types
from succinv.settings import settings
from succinv.structures import Element, Structure

logger = logging.getLogger(__name__)

S_KEY = "S"


@dataclass
class BuilderState:
    structure_id: int
    structure: Structure
    radius: int
    types: Tuple[NeighborhoodType, ...]
    succ: Dict[Element, Element] = field(default_factory=dict)
    pred: Dict[Element, Element] = field(default_factory=dict)
    R_sets: List[Set[Element]] = field(default_factory=list)
    P_sets: List[Set[Element]] = field(default_factory=list)
    anchors: List[Tuple[Element, Element]] = field(default_factory=list)
    B: Set[Element] = field(default_factory=set)
    h: Dict[Element, Element] = field(default_factory=dict)
    guard_hits: int = 0
    graph: nx.MultiGraph = field(default_factory=nx.MultiGraph, repr=False)

    @staticmethod
    def start(structure: Structure, structure_id: int, radius: int) -> "BuilderState":
        state = BuilderState(
            structure_id,
            structure,
            radius,
            element_types(structure, radius, False),
            R_sets=[set() for _ in range(radius + 1)],
            P_sets=[set() for _ in range(radius + 1)],
        )
        state.graph.add_nodes_from(structure.universe)
        state.graph.add_edges_from(structure.sigma_graph.edges)
        return state

    @property
    def A(self) -> Set[Element]:
        return set().union(*self.R_sets, *self.P_sets)

    @property
    def succ_partial(self) -> Set[Tuple[Element, Element]]:
        return set(self.succ.items())

    def enriched(self) -> Structure:
        return self.structure.with_succ(self.succ.items())

    def ball(self, sources: Iterable[Element], radius: int) -> Set[Element]:
        sources = set(sources)
        if not sources:
            return set()
        return set(
            nx.multi_source_dijkstra_path_length(self.graph, sources, cutoff=radius)
        )

    def add_edge(self, x: Element, y: Element, check_distance: bool = True):
        if x == y or x in self.succ or y in self.pred:
            raise ContractViolation(
                f"S-edge ({x}, {y}) breaks the partial successor of structure "
                f"{self.structure_id}"
            )
        if check_distance and y in self.ball([x], 2 * self.radius):
            raise ContractViolation(
                f"S-edge ({x}, {y}) joins elements at distance <= {2 * self.radius}"
            )
        self.succ[x], self.pred[y] = y, x
        self.graph.add_edge(x, y, key=(S_KEY, x, y))
        logger.debug("structure %d: S-edge %d -> %d", self.structure_id, x, y)
        if settings.check_layering:
            cycle = short_cycle_through_s(self.enriched(), self.radius)
            if cycle is not None:
                raise ContractViolation(f"S-edge ({x}, {y}) closes cycle {cycle}")

    def remove_edge(self, x: Element, y: Element):
        if self.succ.get(x) != y:
            raise ContractViolation(f"no S-edge ({x}, {y}) to remove")
        del self.succ[x], self.pred[y]
        self.graph.remove_edge(x, y, key=(S_KEY, x, y))
        logger.debug("structure %d: S-edge %d -/> %d", self.structure_id, x, y)


def s_star(state: BuilderState, x: Element, forward: bool = True) -> Element:
    step = state.succ if forward else state.pred
    seen = {x}
    while x in step:
        x = step[x]
        if x in seen:
            raise ContractViolation(f"element {x} lies on an S-cycle")
        seen.add(x)
    return x


def pick_far(
    state: BuilderState,
    wanted: NeighborhoodType,
    exclusion: Collection[Element],
    candidates: Optional[Iterable[Element]] = None,
) -> Element:
    """Least element of type ``wanted`` at distance > 2r from ``exclusion``."""
    near = state.ball(exclusion, 2 * state.radius)
    for x in state.structure.universe if candidates is None else candidates:
        if state.types[x] == wanted and x not in near:
            return x
    raise InfeasibilityError(
        settings.errors.no_candidate.format(wanted, 2 * state.radius, len(exclusion))
    )
