__all__ = ["weave_junctions"]
import logging

from succinv.structures import Structure
from succinv.weaving.classification import Classification
from succinv.weaving.rare import protect_level
from succinv.weaving.state import BuilderState, pick_far

logger = logging.getLogger(__name__)


def weave_junctions(
    g1: Structure, r: int, state: BuilderState, cls: Classification
) -> BuilderState:
    rare_area = set().union(*state.R_sets)
    P = state.P_sets
    for tp in cls.frequent:
        x_min = pick_far(state, tp, rare_area | P[0])
        P[0].add(x_min)
        x_max = pick_far(state, tp, rare_area | P[0])
        P[0].add(x_max)
        state.anchors.append((x_min, x_max))
    m = len(state.anchors)
    for i in range(m):
        state.add_edge(state.anchors[i][1], state.anchors[(i + 1) % m][0])
    for k in range(r):
        protect_level(state, P, k, rare_area)
    logger.info("anchored %d frequent types: %s", m, state.anchors)
    return state
