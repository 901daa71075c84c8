__all__ = ["transfer_partial"]
import logging
from typing import Collection, Dict, FrozenSet, Iterable, List, Set, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from succinv.errors import ContractViolation, SimilarityError
from succinv.layering import short_cycle_through_s
from succinv.registry import element_types
from succinv.structures import Element, Row, Structure
from succinv.weaving.state import BuilderState

logger = logging.getLogger(__name__)

Incidence = Tuple[Tuple[Tuple[int, Row], ...], ...]


def _loops(incidence: Incidence, x: Element) -> FrozenSet[Tuple[int, Row]]:
    """Rows of ``x`` with no other element, up to the element itself."""
    return frozenset(
        (i, tuple(0 for _ in row)) for i, row in incidence[x] if set(row) == {x}
    )


def _node_match(host: dict, pattern: dict) -> bool:
    return host["loops"] == pattern["loops"] and (
        pattern["tp"] is None or pattern["tp"] == host["tp"]
    )


def _rows_within(
    incidence: Incidence, elements: Collection[Element]
) -> Set[Tuple[int, Row]]:
    return {
        (i, row)
        for x in elements
        for i, row in incidence[x]
        if all(y in elements for y in row)
    }


def _sigma_ball(s: Structure, sources: Iterable[Element], radius: int) -> Set[Element]:
    sources = set(sources)
    if not sources:
        return set()
    return set(
        nx.multi_source_dijkstra_path_length(s.sigma_graph, sources, cutoff=radius)
    )


def transfer_partial(
    g1: Structure, state1: BuilderState, g2: Structure, r: int
) -> Tuple[Dict[Element, Element], BuilderState]:
    """Embed the woven region of ``g1`` into ``g2`` and mirror its successor.

    B, the r-ball of A_1 in the enriched first structure, is split into
    Σ-components; each is mapped by an induced embedding preserving the types
    of A_1 elements, and images of distinct components stay more than 2r apart.
    """
    A1 = state1.A
    B = state1.ball(A1, r)
    state1.B = B
    types2 = element_types(g2, r, False)
    incidence1, incidence2 = g1.incidence(), g2.incidence()

    host = nx.Graph(g2.sigma_graph)
    for y in host:
        host.nodes[y].update(tp=types2[y].id, loops=_loops(incidence2, y))
    region = g1.sigma_graph.subgraph(B)
    components: List[List[Element]] = sorted(
        (sorted(c) for c in nx.connected_components(region)), key=lambda c: c[0]
    )
    h: Dict[Element, Element] = {}

    def embeddings(component: List[Element], forbidden: Set[Element]):
        pattern = nx.Graph(region.subgraph(component))
        for x in pattern:
            tp = state1.types[x].id if x in A1 else None
            pattern.nodes[x].update(tp=tp, loops=_loops(incidence1, x))
        available = host.subgraph(set(host) - forbidden)
        rows1 = _rows_within(incidence1, set(component))
        matcher = GraphMatcher(available, pattern, node_match=_node_match)
        for mapping in matcher.subgraph_isomorphisms_iter():
            image = {x: y for y, x in mapping.items()}
            image_set = set(image.values())
            rows2 = {
                (i, tuple(image[x] for x in row)) for i, row in sorted(rows1)
            }
            if rows2 != _rows_within(incidence2, image_set):
                continue
            if any(
                not _sigma_ball(g2, [image[x]], r) <= image_set
                for x in component
                if x in A1
            ):
                continue
            yield image

    def place(j: int, forbidden: Set[Element]) -> bool:
        if j == len(components):
            return True
        for image in embeddings(components[j], forbidden):
            h.update(image)
            if place(j + 1, forbidden | _sigma_ball(g2, image.values(), 2 * r)):
                return True
            for x in image:
                del h[x]
        return False

    if not place(0, set()):
        raise SimilarityError(
            f"no type-preserving embedding of the {len(B)}-element woven region "
            "into the second structure"
        )
    state1.h = h
    state2 = BuilderState.start(g2, 2, r)
    state2.h = h
    state2.R_sets = [{h[x] for x in level} for level in state1.R_sets]
    state2.P_sets = [{h[x] for x in level} for level in state1.P_sets]
    state2.anchors = [(h[a], h[b]) for a, b in state1.anchors]
    for x, y in sorted(state1.succ.items()):
        state2.add_edge(h[x], h[y], check_distance=False)
    cycle = short_cycle_through_s(state2.enriched(), r)
    if cycle is not None:
        raise ContractViolation(f"transferred successor closes short cycle {cycle}")
    logger.info(
        "transferred %d S-edges through %d components",
        len(state1.succ),
        len(components),
    )
    return h, state2
