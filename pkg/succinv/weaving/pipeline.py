__all__ = ["WeaveResult", "isomorphism_successors", "weave_pair"]
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from succinv.canonical import find_isomorphism
from succinv.errors import InputError, SimilarityError
from succinv.gaifman import structure_degree
from succinv.parameters import ParamsBundle
from succinv.registry import threshold_equivalent, type_census
from succinv.structures import Element, Structure
from succinv.weaving.classification import Classification, classify_types
from succinv.weaving.completion import complete
from succinv.weaving.junctions import weave_junctions
from succinv.weaving.rare import weave_rare
from succinv.weaving.state import BuilderState
from succinv.weaving.transfer import transfer_partial

logger = logging.getLogger(__name__)

Permutation = Tuple[Element, ...]


@dataclass(frozen=True)
class WeaveResult:
    succ1: Permutation
    succ2: Permutation
    classification: Classification
    params: ParamsBundle
    state1: Optional[BuilderState] = None
    state2: Optional[BuilderState] = None
    isomorphism: Optional[Permutation] = None

    @property
    def isomorphism_branch(self) -> bool:
        return self.isomorphism is not None

    def enriched(self, g1: Structure, g2: Structure) -> Tuple[Structure, Structure]:
        return (
            g1.with_succ(enumerate(self.succ1)),
            g2.with_succ(enumerate(self.succ2)),
        )


def isomorphism_successors(
    g1: Structure, g2: Structure
) -> Tuple[Permutation, Permutation, Permutation]:
    """Index-order cycle on ``g1`` and its image on ``g2`` under an isomorphism."""
    pi = find_isomorphism(g1, g2)
    if pi is None:
        raise SimilarityError("all types are rare but the structures differ")
    n = g1.size
    succ1 = tuple((x + 1) % n for x in g1.universe)
    succ2 = [0] * n
    for x in g1.universe:
        succ2[pi[x]] = pi[succ1[x]]
    return succ1, tuple(succ2), pi


def weave_pair(g1: Structure, g2: Structure, params: ParamsBundle) -> WeaveResult:
    if g1.signature != g2.signature:
        raise InputError("structures over different signatures")
    for i, g in enumerate((g1, g2), 1):
        degree = structure_degree(g)
        if degree > params.d:
            raise InputError(f"structure {i} has degree {degree} > {params.d}")
    r, t = params.r, params.t
    census1, census2 = type_census(g1, r), type_census(g2, r)
    if not threshold_equivalent(census1, census2, t):
        raise SimilarityError(f"censuses at radius {r} differ beyond threshold {t}")
    cls = classify_types(census1, census2, params.g)
    cls = Classification(
        cls.rare, cls.frequent, cls.beta, params.binding_bound(cls.beta)
    )
    if cls.all_rare:
        logger.info("all types rare, taking the isomorphism branch")
        succ1, succ2, pi = isomorphism_successors(g1, g2)
        return WeaveResult(succ1, succ2, cls, params, isomorphism=pi)
    state1 = weave_rare(g1, r, cls)
    state1 = weave_junctions(g1, r, state1, cls)
    _, state2 = transfer_partial(g1, state1, g2, r)
    succ1 = complete(g1, state1, r, cls, params.d)
    succ2 = complete(g2, state2, r, cls, params.d)
    return WeaveResult(succ1, succ2, cls, params, state1, state2)
