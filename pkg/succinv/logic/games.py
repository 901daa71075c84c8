__all__ = ["ef_equivalent"]
import logging
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from succinv.errors import InputError, ResourceError
from succinv.settings import settings
from succinv.structures import Structure

logger = logging.getLogger(__name__)

Tables = List[FrozenSet[Tuple[int, ...]]]
Position = FrozenSet[Tuple[int, int]]


def _tables(s: Structure) -> Tables:
    return [*s.tables, frozenset(s.succ or ())]


def _incidence(s: Structure, tables: Tables) -> List[List[Tuple[int, tuple]]]:
    result: List[List[Tuple[int, tuple]]] = [[] for _ in s.universe]
    for i, table in enumerate(tables):
        for row in sorted(table):
            for x in sorted(set(row)):
                result[x].append((i, row))
    return result


def _arities(s: Structure) -> List[int]:
    return [*(arity for _, arity in s.signature.relations), 2]


def _pair_type(
    tables: Tables, arities: List[int], x: int, y: int
) -> Tuple[bool, ...]:
    return tuple(
        flag
        for table, arity in zip(tables, arities)
        if arity == 2
        for flag in ((x, y) in table, (y, x) in table)
    )


def _colours(
    structures: Sequence[Tuple[Structure, Tables]], levels: int
) -> List[Tuple[Tuple[int, ...], ...]]:
    """Set-based colour refinement on the disjoint union.

    Colours at level j are shared integers; equal colours at level j imply
    agreement on every one-variable formula of rank j (binary signatures).
    """
    interned: Dict[object, int] = {}

    def intern(key) -> int:
        return interned.setdefault(key, len(interned))

    current = tuple(
        tuple(
            intern(
                tuple(
                    (x,) * arity in table
                    for table, arity in zip(tables, _arities(s))
                )
            )
            for x in s.universe
        )
        for s, tables in structures
    )
    result = [current]
    for _ in range(1, levels):
        current = tuple(
            tuple(
                intern(
                    (
                        colour[x],
                        frozenset(
                            (_pair_type(tables, _arities(s), x, y), colour[y])
                            for y in s.universe
                            if y != x
                        ),
                    )
                )
                for x in s.universe
            )
            for (s, tables), colour in zip(structures, current)
        )
        result.append(current)
    return result


class _Game:
    def __init__(self, a: Structure, b: Structure, k: int, prune: bool):
        self.sides = (a, b)
        self.tables = (_tables(a), _tables(b))
        self.incidence = (
            _incidence(a, self.tables[0]),
            _incidence(b, self.tables[1]),
        )
        self.colours = None
        if prune and k > 0:
            self.colours = _colours(list(zip(self.sides, self.tables)), k)
        self.memo: Dict[Tuple[Position, int], bool] = {}

    def _consistent(self, mapping: Dict[int, int], side: int, x: int) -> bool:
        """Rows through ``x`` inside the domain of ``mapping`` have images."""
        tables = self.tables[1 - side]
        for rel, row in self.incidence[side][x]:
            if all(z in mapping for z in row):
                if tuple(mapping[z] for z in row) not in tables[rel]:
                    return False
        return True

    def extend(self, position: Position, x: int, y: int) -> Optional[Position]:
        forward = dict(position)
        backward = {v: u for u, v in position}
        if x in forward or y in backward:
            return None
        forward[x], backward[y] = y, x
        if not self._consistent(forward, 0, x) or not self._consistent(
            backward, 1, y
        ):
            return None
        return position | {(x, y)}

    def responses(self, side: int, x: int, rounds: int) -> Sequence[int]:
        other = self.sides[1 - side].universe
        if self.colours is None:
            return other
        level = self.colours[rounds - 1]
        wanted = level[side][x]
        return [y for y in other if level[1 - side][y] == wanted]

    def duplicator_wins(self, position: Position, rounds: int) -> bool:
        if rounds == 0:
            return True
        key = (position, rounds)
        if key in self.memo:
            return self.memo[key]
        if len(self.memo) >= settings.ef_state_budget:
            raise ResourceError(
                f"EF search exceeded {settings.ef_state_budget} states"
            )
        chosen = (
            {x for x, _ in position},
            {y for _, y in position},
        )
        result = True
        for side in (0, 1):
            for x in self.sides[side].universe:
                if x in chosen[side]:
                    continue
                if not any(
                    extended is not None
                    and self.duplicator_wins(extended, rounds - 1)
                    for extended in (
                        self.extend(position, *((x, y) if side == 0 else (y, x)))
                        for y in self.responses(side, x, rounds)
                    )
                ):
                    result = False
                    break
            if not result:
                break
        self.memo[key] = result
        return result


def ef_equivalent(
    a: Structure, b: Structure, k: int, prune: Optional[bool] = None
) -> bool:
    """Whether Duplicator wins the k-round Ehrenfeucht-Fraisse game on a and b.

    Successor relations take part as an extra binary relation, an absent one
    reading as empty. ``prune`` restricts Duplicator to answers of matching
    colour; it defaults to ``settings.ef_pruning`` and only applies when every
    relation is at most binary.
    """
    if a.signature != b.signature:
        raise InputError("structures over different signatures")
    if k < 0:
        raise InputError(f"negative number of rounds {k}")
    if prune is None:
        prune = settings.ef_pruning
    game = _Game(a, b, k, prune and a.signature.max_arity <= 2)
    result = game.duplicator_wins(frozenset(), k)
    logger.debug("EF game with %d rounds: %d states, %s", k, len(game.memo), result)
    return result
