__all__ = ["protect_level", "weave_rare"]
import logging
from typing import List, Set

from succinv.errors import InputError
from succinv.structures import Element, Structure
from succinv.weaving.classification import Classification
from succinv.weaving.state import BuilderState, pick_far

logger = logging.getLogger(__name__)


def protect_level(
    state: BuilderState, levels: List[Set[Element]], k: int, base: Set[Element]
):
    """Give every element of ``levels[k]`` lacking one an S-successor and an
    S-predecessor of its own type, far from ``base`` and ``levels[:k + 2]``."""
    graph = state.structure.sigma_graph
    for x in sorted(levels[k]):
        for y in sorted(graph[x]):
            if not any(y in level for level in levels[: k + 2]):
                levels[k + 1].add(y)
        if x not in state.succ:
            plus = pick_far(state, state.types[x], base.union(*levels[: k + 2]))
            levels[k + 1].add(plus)
            state.add_edge(x, plus)
        if x not in state.pred:
            minus = pick_far(state, state.types[x], base.union(*levels[: k + 2]))
            levels[k + 1].add(minus)
            state.add_edge(minus, x)


def weave_rare(g1: Structure, r: int, cls: Classification) -> BuilderState:
    if cls.all_rare:
        raise InputError("rare protection needs a frequent type")
    state = BuilderState.start(g1, 1, r)
    R = state.R_sets
    first = cls.frequent[0]
    R[0].update(x for x in g1.universe if state.types[x] in cls.rare)
    graph = g1.sigma_graph
    for x in sorted(R[0]):
        R[1].update(y for y in graph[x] if y not in R[0])
        plus = pick_far(state, first, R[0] | R[1])
        R[1].add(plus)
        state.add_edge(x, plus)
        minus = pick_far(state, first, R[0] | R[1])
        R[1].add(minus)
        state.add_edge(minus, x)
    for k in range(1, r):
        protect_level(state, R, k, set())
    logger.info(
        "protected %d rare occurrences with %d S-edges", len(R[0]), len(state.succ)
    )
    return state
