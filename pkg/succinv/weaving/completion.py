__all__ = ["complete"]
import logging
from typing import Tuple

from succinv.errors import ContractViolation, InfeasibilityError
from succinv.gaifman import n_bound
from succinv.logic.successors import is_circular_successor
from succinv.registry import NeighborhoodType
from succinv.settings import settings
from succinv.structures import Element, Structure
from succinv.weaving.classification import Classification
from succinv.weaving.state import BuilderState, s_star

logger = logging.getLogger(__name__)


def _greedy(state: BuilderState, i: int, wanted: NeighborhoodType):
    tp = state.types
    x_min, x_max = state.anchors[i]
    s, t = s_star(state, x_min), s_star(state, x_max, forward=False)
    reach = 2 * state.radius
    added = 0
    while True:
        near_s, near_t = state.ball([s], reach), state.ball([t], reach)
        for x in state.structure.universe:
            if (
                x in state.pred
                or tp[x] != wanted
                or x in near_s
                or x in near_t
                or s_star(state, x) in near_t
            ):
                continue
            # with the junction edges in place the head of s is t or of another
            # type, so only partial states without them reach this
            if s_star(state, x) == s:
                state.guard_hits += 1
                logger.info(
                    "structure %d: skipping %d, head of the chain ending at %d",
                    state.structure_id,
                    x,
                    s,
                )
                continue
            break
        else:
            break
        state.add_edge(s, x)
        s = s_star(state, x)
        added += 1
    state.add_edge(s, t)
    logger.info(
        "structure %d: greedy phase linked %d chains of type %d",
        state.structure_id,
        added,
        i,
    )


def _splice(state: BuilderState, wanted: NeighborhoodType, d: int):
    tp = state.types
    reach = 2 * state.radius
    A = state.A
    pending = [x for x in state.structure.universe if tp[x] == wanted]
    for x in pending:
        if x in state.pred:
            continue
        end = s_star(state, x)
        near_x, near_end = state.ball([x], reach), state.ball([end], reach)
        for y, z in sorted(state.succ.items()):
            if (
                y not in A
                and z not in A
                and tp[y] == wanted
                and tp[z] == wanted
                and y not in near_x
                and z not in near_end
            ):
                break
        else:
            raise InfeasibilityError(
                settings.errors.splice.format(x, 2 * n_bound(d + 2, reach) + 1)
            )
        state.remove_edge(y, z)
        state.add_edge(y, x)
        state.add_edge(end, z)
        logger.debug(
            "structure %d: spliced chain %d..%d between %d and %d",
            state.structure_id,
            x,
            end,
            y,
            z,
        )


def complete(
    g: Structure, state: BuilderState, r: int, cls: Classification, d: int = 0
) -> Tuple[Element, ...]:
    """Extend the partial successor of ``state`` to a circular one on ``g``.

    ``d`` only appears in infeasibility diagnostics.
    """
    if state.structure != g or state.radius != r:
        raise ContractViolation("builder state does not belong to this structure")
    for i, wanted in enumerate(cls.frequent):
        _greedy(state, i, wanted)
    for wanted in cls.frequent:
        _splice(state, wanted, d)
    missing = [x for x in g.universe if x not in state.succ]
    if missing:
        raise InfeasibilityError(
            f"elements {missing[:10]} of structure {state.structure_id} "
            "received no successor"
        )
    perm = tuple(state.succ[x] for x in g.universe)
    if not is_circular_successor(set(state.succ.items()), g.size):
        raise ContractViolation(
            f"completed successor of structure {state.structure_id} is not circular"
        )
    return perm
