__all__ = ["layered_neighborhoods", "safe_to_add", "short_cycle_through_s"]
from typing import List, Optional

import networkx as nx

from succinv.gaifman import ball
from succinv.structures import Element, Structure


def _s_edges(s: Structure):
    return sorted({(min(x, y), max(x, y)) for x, y in (s.succ or ()) if x != y})


def short_cycle_through_s(s: Structure, r: int) -> Optional[List[Element]]:
    """A cycle of length at most 2r+1 using an S-edge, if any.

    The cycle is returned as a vertex sequence starting with the endpoints of
    the S-edge it goes through.
    """
    graph = s.full_graph
    for u, v in _s_edges(s):
        view = nx.restricted_view(graph, [], [(u, v)])
        paths = nx.single_source_shortest_path(view, v, cutoff=2 * r)
        if u in paths:
            return [u, *paths[u][:-1]]
    return None


def layered_neighborhoods(s: Structure, r: int) -> bool:
    if not s.succ:
        return True
    s_edges = _s_edges(s)
    for x in s.universe:
        nodes = ball(s, x, r, include_succ=True)
        inner = [(u, v) for u, v in s_edges if u in nodes and v in nodes]
        if not inner:
            continue
        bridges = {
            frozenset(edge) for edge in nx.bridges(s.full_graph.subgraph(nodes))
        }
        if any(frozenset(edge) not in bridges for edge in inner):
            return False
    return True


def safe_to_add(s: Structure, x: Element, y: Element, r: int) -> bool:
    return y not in ball(s, x, 2 * r, include_succ=True)
