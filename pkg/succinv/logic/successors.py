__all__ = [
    "circular_to_linear",
    "is_circular_successor",
    "is_linear_successor",
    "linear_to_circular",
]
from typing import AbstractSet, FrozenSet, Tuple

from succinv.errors import InputError

Pairs = AbstractSet[Tuple[int, int]]


def _as_map(pairs: Pairs, n: int):
    succ, pred = {}, {}
    for x, y in pairs:
        if not (0 <= x < n and 0 <= y < n) or x in succ or y in pred:
            return None
        succ[x], pred[y] = y, x
    return succ


def is_circular_successor(pairs: Pairs, n: int) -> bool:
    if n == 0:
        return not pairs
    succ = _as_map(pairs, n)
    if succ is None or len(succ) != n:
        return False
    x, steps = succ[0], 1
    while x != 0:
        x, steps = succ[x], steps + 1
    return steps == n


def is_linear_successor(pairs: Pairs, n: int) -> bool:
    if n == 0:
        return not pairs
    succ = _as_map(pairs, n)
    if succ is None or len(succ) != n - 1:
        return False
    (head,) = set(range(n)) - set(succ.values())
    steps = 1
    while head in succ:
        head, steps = succ[head], steps + 1
    return steps == n


def linear_to_circular(pairs: Pairs, n: int) -> FrozenSet[Tuple[int, int]]:
    if not is_linear_successor(pairs, n):
        raise InputError("not a linear successor")
    if n == 0:
        return frozenset()
    sources = {x for x, _ in pairs}
    targets = {y for _, y in pairs}
    (last,) = set(range(n)) - sources
    (first,) = set(range(n)) - targets
    return frozenset(pairs) | {(last, first)}


def circular_to_linear(pairs: Pairs, minimum: int) -> FrozenSet[Tuple[int, int]]:
    """Cut the circular successor open before ``minimum``."""
    return frozenset((x, y) for x, y in pairs if y != minimum)
