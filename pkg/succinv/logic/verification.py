__all__ = ["CheckResult", "VerificationReport", "verify_weave"]
import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Dict, List, Optional, Sequence, Set, Tuple

from succinv.canonical import canonical_labeling
from succinv.errors import ResourceError
from succinv.fractal import fractal_type_id
from succinv.layering import short_cycle_through_s
from succinv.logic.games import ef_equivalent
from succinv.logic.successors import is_circular_successor
from succinv.parameters import ParamsBundle
from succinv.registry import (
    NeighborhoodType,
    element_types,
    threshold_equivalent,
    type_census,
)
from succinv.structures import Element, Structure

if TYPE_CHECKING:
    from succinv.weaving.pipeline import WeaveResult
    from succinv.weaving.state import BuilderState

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    witness: Optional[List[int]] = None
    empirical: bool = False


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    checks: List[CheckResult]
    params: ParamsBundle
    census1: Dict[str, int]
    census2: Dict[str, int]
    isomorphism_branch: bool = False
    binding_bound: Optional[str] = None
    guard_hits: int = 0
    notes: List[str] = field(default_factory=list)

    def failed(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]


def _circularity(name: str, succ: Sequence[Element]) -> CheckResult:
    n = len(succ)
    if is_circular_successor(set(enumerate(succ)), n):
        return CheckResult(name, True, f"single orbit over {n} elements")
    sources: Dict[Element, List[Element]] = {}
    for x, y in enumerate(succ):
        sources.setdefault(y, []).append(x)
    clashes = sorted(x for xs in sources.values() if len(xs) > 1 for x in xs)
    if clashes:
        return CheckResult(name, False, "not a bijection", clashes)
    orbit, x = [0], succ[0]
    while x != 0:
        orbit.append(x)
        x = succ[x]
    return CheckResult(name, False, f"orbit of 0 has {len(orbit)} of {n}", orbit)


def _layering(name: str, enriched: Structure, r: int) -> CheckResult:
    cycle = short_cycle_through_s(enriched, r)
    if cycle is None:
        return CheckResult(name, True, f"no cycle of length <= {2 * r + 1} via S")
    return CheckResult(name, False, "short cycle through an S-edge", cycle)


def _homogeneity(
    name: str, succ: Sequence[Element], state: "BuilderState"
) -> CheckResult:
    rare, anchors = state.R_sets[0], state.P_sets[0]
    for x, y in enumerate(succ):
        if x in rare or y in rare or (x in anchors and y in anchors):
            continue
        if state.types[x] != state.types[y]:
            return CheckResult(
                name,
                False,
                f"S-edge joins types {state.types[x]} and {state.types[y]}",
                [x, y],
            )
    return CheckResult(name, True, "S-edges join equal types off R0 and junctions")


def _rare_flanking(
    name: str, succ: Sequence[Element], state: "BuilderState", first: NeighborhoodType
) -> CheckResult:
    pred = {y: x for x, y in enumerate(succ)}
    for x in sorted(state.R_sets[0]):
        neighbours = (pred.get(x), succ[x])
        if any(y is None or state.types[y] != first for y in neighbours):
            return CheckResult(
                name, False, f"rare element {x} not flanked by {first}", [x]
            )
    return CheckResult(
        name, True, f"{len(state.R_sets[0])} rare elements flanked by {first}"
    )


def _fractal_regularity(
    name: str,
    enriched: Structure,
    state: "BuilderState",
    r: int,
    excluded: Set[Element],
) -> CheckResult:
    actual = element_types(enriched, r, True)
    predicted: Dict[NeighborhoodType, NeighborhoodType] = {}
    checked = 0
    for x in enriched.universe:
        if x in excluded:
            continue
        sigma = state.types[x]
        if sigma not in predicted:
            predicted[sigma] = fractal_type_id(sigma, r)
        if actual[x] != predicted[sigma]:
            return CheckResult(
                name, False, f"type {actual[x]} is not the fractal of {sigma}", [x]
            )
        checked += 1
    return CheckResult(
        name,
        True,
        f"{checked} elements over {len(predicted)} Σ-types match their fractals",
    )


def _h_preservation(
    enriched1: Structure,
    enriched2: Structure,
    h: Dict[Element, Element],
    domain: Set[Element],
    r: int,
) -> CheckResult:
    types1 = element_types(enriched1, r, True)
    types2 = element_types(enriched2, r, True)
    for x in sorted(domain):
        if types1[x] != types2[h[x]]:
            return CheckResult(
                "h-type-preservation",
                False,
                f"{x} has type {types1[x]}, its image {h[x]} has {types2[h[x]]}",
                [x, h[x]],
            )
    return CheckResult("h-type-preservation", True, f"{len(domain)} elements")


def _threshold(
    enriched1: Structure, enriched2: Structure, r: int, t: int
) -> CheckResult:
    census1 = type_census(enriched1, r, True)
    census2 = type_census(enriched2, r, True)
    if threshold_equivalent(census1, census2, t):
        return CheckResult(
            "threshold-equivalence", True, f"enriched censuses agree at ({r}, {t})"
        )
    counts1, counts2 = census1.as_dict(), census2.as_dict()
    detail = ""
    for key in sorted(counts1.keys() | counts2.keys()):
        n1, n2 = counts1.get(key, 0), counts2.get(key, 0)
        if n1 != n2 and not (n1 > t and n2 > t):
            detail = f"type {key[:12]} occurs {n1} and {n2} times"
            break
    return CheckResult("threshold-equivalence", False, detail)


def _arc(
    succ: Sequence[Element], start: Element, end: Element
) -> Optional[List[Element]]:
    arc, x = [start], start
    while x != end:
        x = succ[x]
        if len(arc) == len(succ):
            return None
        arc.append(x)
    return arc


def _segments(
    name: str,
    succ: Sequence[Element],
    state: "BuilderState",
    frequent: Tuple[NeighborhoodType, ...],
) -> CheckResult:
    for i, ((x_min, x_max), tp) in enumerate(zip(state.anchors, frequent)):
        arc = _arc(succ, x_min, x_max)
        if arc is None:
            return CheckResult(
                name, False, f"no S-arc from {x_min} to {x_max}", [x_min, x_max]
            )
        expected = {x for x in state.structure.universe if state.types[x] == tp}
        if i == 0:
            expected |= state.R_sets[0]
        difference = sorted(expected.symmetric_difference(arc))
        if difference:
            return CheckResult(
                name,
                False,
                f"arc of frequent type {i} ({tp}) is not its segment",
                difference,
            )
    return CheckResult(name, True, f"{len(frequent)} segments in order")


def _ef(
    enriched1: Structure, enriched2: Structure, depth: int, notes: List[str]
) -> Optional[CheckResult]:
    try:
        equivalent = ef_equivalent(enriched1, enriched2, depth)
    except ResourceError as error:
        notes.append(f"EF check skipped: {error}")
        return None
    notes.append(
        "the EF check is empirical: forced parameters carry no Hanf guarantee"
    )
    return CheckResult(
        f"ef-equivalence-{depth}",
        equivalent,
        "Duplicator wins" if equivalent else "Spoiler wins",
        empirical=True,
    )


def verify_weave(
    result: "WeaveResult",
    g1: Structure,
    g2: Structure,
    r: int,
    t: int,
    ef_depth: Optional[int] = None,
) -> VerificationReport:
    """Check a weave against the properties its construction guarantees.

    Failures are recorded in the report, never raised.
    """
    enriched1, enriched2 = result.enriched(g1, g2)
    checks = [
        _circularity("circularity-1", result.succ1),
        _circularity("circularity-2", result.succ2),
    ]
    notes: List[str] = []
    cls = result.classification
    guard_hits = 0
    if result.isomorphism_branch:
        same = canonical_labeling(enriched1)[0] == canonical_labeling(enriched2)[0]
        checks.append(
            CheckResult(
                "enriched-isomorphism",
                same,
                "canonical forms agree" if same else "canonical forms differ",
            )
        )
    else:
        state1, state2 = result.state1, result.state2
        assert state1 is not None and state2 is not None
        first = cls.frequent[0]
        A1, A2 = state1.A, state2.A
        guard_hits = state1.guard_hits + state2.guard_hits
        for i, (succ, enriched, state, area) in enumerate(
            (
                (result.succ1, enriched1, state1, A1),
                (result.succ2, enriched2, state2, A2),
            ),
            1,
        ):
            checks.append(_layering(f"layering-{i}", enriched, r))
            checks.append(_homogeneity(f"homogeneity-{i}", succ, state))
            checks.append(_rare_flanking(f"rare-flanking-{i}", succ, state, first))
            checks.append(
                _fractal_regularity(
                    f"fractal-regularity-{i}", enriched, state, r, area
                )
            )
            checks.append(
                _segments(f"segment-structure-{i}", succ, state, cls.frequent)
            )
        checks.append(_h_preservation(enriched1, enriched2, state1.h, A1, r))
    checks.append(_threshold(enriched1, enriched2, r, t))
    if ef_depth is not None:
        check = _ef(enriched1, enriched2, ef_depth, notes)
        if check is not None:
            checks.append(check)
    passed = all(check.passed for check in checks)
    for check in checks:
        if not check.passed:
            logger.warning("check %s failed: %s", check.name, check.detail)
    return VerificationReport(
        passed,
        checks,
        result.params,
        type_census(enriched1, r, True).as_dict(),
        type_census(enriched2, r, True).as_dict(),
        result.isomorphism_branch,
        cls.binding_bound,
        guard_hits,
        notes,
    )
