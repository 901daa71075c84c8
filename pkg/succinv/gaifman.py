__all__ = [
    "ball",
    "gaifman_distance",
    "gaifman_neighbors",
    "n_bound",
    "neighborhood",
    "structure_degree",
]
import math
from typing import Set, Union

import networkx as nx

from succinv.structures import Element, PointedStructure, Structure


def gaifman_neighbors(
    s: Structure, x: Element, include_succ: bool = False
) -> Set[Element]:
    s.check(x)
    return set(s.graph(include_succ)[x])


def gaifman_distance(
    s: Structure, x: Element, y: Element, include_succ: bool = False
) -> Union[int, float]:
    s.check(x)
    s.check(y)
    try:
        return nx.shortest_path_length(s.graph(include_succ), x, y)
    except nx.NetworkXNoPath:
        return math.inf


def ball(s: Structure, x: Element, r: int, include_succ: bool = False) -> Set[Element]:
    s.check(x)
    return set(nx.single_source_shortest_path_length(s.graph(include_succ), x, r))


def neighborhood(
    s: Structure, x: Element, r: int, include_succ: bool = False
) -> PointedStructure:
    """Pointed substructure induced by the r-ball of ``x``.

    Elements are renumbered by (distance, original index), so the center is 0.
    The successor relation is kept (restricted) only when ``include_succ``.
    """
    s.check(x)
    dist = nx.single_source_shortest_path_length(s.graph(include_succ), x, r)
    order = sorted(dist, key=lambda y: (dist[y], y))
    return PointedStructure(s.induced(order, keep_succ=include_succ), 0)


def structure_degree(s: Structure, include_succ: bool = False) -> int:
    graph = s.graph(include_succ)
    return max((deg for _, deg in graph.degree), default=0)


def n_bound(d: int, r: int) -> int:
    if r == 0 or d == 0:
        return 1
    if d == 1:
        return 2
    if d == 2:
        return 2 * r + 1
    return d * ((d - 1) ** r - 1) // (d - 2) + 1
