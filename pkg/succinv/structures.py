__all__ = ["PointedStructure", "RESERVED_NAMES", "Signature", "Structure"]
from dataclasses import dataclass, field
from functools import cached_property
from typing import (
    Collection,
    Dict,
    FrozenSet,
    Iterable,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

import networkx as nx

from succinv.errors import InputError
from succinv.settings import settings

RESERVED_NAMES = frozenset({"S", "Sbar"})

Element = int
Row = Tuple[Element, ...]
Pairs = FrozenSet[Tuple[Element, Element]]


@dataclass(frozen=True)
class Signature:
    relations: Tuple[Tuple[str, int], ...]

    def __post_init__(self):
        seen = set()
        for name, arity in self.relations:
            if name in RESERVED_NAMES:
                raise InputError(settings.errors.reserved_name.format(name), [name])
            if name in seen:
                raise InputError(f"duplicate relation {name!r}", [name])
            if arity < 1:
                raise InputError(f"arity {arity} is not positive", [name])
            seen.add(name)

    @staticmethod
    def of(relations: Mapping[str, int]) -> "Signature":
        return Signature(tuple(relations.items()))

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.relations)

    def index(self, name: str) -> int:
        for i, (other, _) in enumerate(self.relations):
            if other == name:
                return i
        raise InputError(f"unknown relation {name!r}", [name])

    def arity(self, name: str) -> int:
        return self.relations[self.index(name)][1]

    @property
    def max_arity(self) -> int:
        return max((arity for _, arity in self.relations), default=0)


@dataclass(frozen=True)
class Structure:
    signature: Signature
    size: int
    tables: Tuple[FrozenSet[Row], ...]
    succ: Optional[Pairs] = None

    @staticmethod
    def build(
        signature: Signature,
        size: int,
        relations: Mapping[str, Iterable[Sequence[Element]]] = {},
        succ: Optional[Iterable[Sequence[Element]]] = None,
    ) -> "Structure":
        if size < 0:
            raise InputError(f"negative universe size {size}", ["universe"])
        for name in relations:
            signature.index(name)
        tables = []
        for name, arity in signature.relations:
            rows = []
            for i, row in enumerate(relations.get(name, ())):
                row = tuple(row)
                if len(row) != arity:
                    raise InputError(
                        settings.errors.arity_mismatch.format(len(row), arity),
                        ["relations", name, i],
                    )
                _check_range(row, size, ["relations", name, i])
                rows.append(row)
            tables.append(frozenset(rows))
        pairs = None
        if succ is not None:
            pairs = []
            for i, pair in enumerate(succ):
                pair = tuple(pair)
                if len(pair) != 2:
                    raise InputError(f"pair of length {len(pair)}", ["succ", i])
                _check_range(pair, size, ["succ", i])
                pairs.append(pair)
            pairs = frozenset(pairs)
        return Structure(signature, size, tuple(tables), pairs)

    def check(self, x: Element):
        if not 0 <= x < self.size:
            raise InputError(settings.errors.out_of_range.format(x, self.size - 1))

    def table(self, name: str) -> FrozenSet[Row]:
        return self.tables[self.signature.index(name)]

    @property
    def universe(self) -> range:
        return range(self.size)

    def with_succ(self, pairs: Optional[Iterable[Tuple[Element, Element]]]):
        if pairs is None:
            return Structure(self.signature, self.size, self.tables)
        return Structure.build(
            self.signature, self.size, self.relations(), sorted(pairs)
        )

    def relations(self) -> Dict[str, FrozenSet[Row]]:
        return dict(zip(self.signature.names, self.tables))

    def induced(
        self, elements: Sequence[Element], keep_succ: bool = True
    ) -> "Structure":
        """Substructure on ``elements``, element ``elements[i]`` becoming ``i``."""
        index = {x: i for i, x in enumerate(elements)}
        tables = tuple(
            frozenset(
                tuple(index[x] for x in row)
                for row in table
                if all(x in index for x in row)
            )
            for table in self.tables
        )
        succ = None
        if keep_succ and self.succ is not None:
            succ = frozenset(
                (index[x], index[y])
                for x, y in self.succ
                if x in index and y in index
            )
        return Structure(self.signature, len(elements), tables, succ)

    def relabel(self, perm: Sequence[Element]) -> "Structure":
        """Image of the structure under ``x -> perm[x]``."""
        tables = tuple(
            frozenset(tuple(perm[x] for x in row) for row in table)
            for table in self.tables
        )
        succ = None
        if self.succ is not None:
            succ = frozenset((perm[x], perm[y]) for x, y in self.succ)
        return Structure(self.signature, self.size, tables, succ)

    def incidence(self) -> Tuple[Tuple[Tuple[int, Row], ...], ...]:
        """Per element, the (relation index, row) pairs it occurs in."""
        result: list = [[] for _ in self.universe]
        for i, table in enumerate(self.tables):
            for row in sorted(table):
                for x in sorted(set(row)):
                    result[x].append((i, row))
        return tuple(map(tuple, result))

    @cached_property
    def sigma_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.universe)
        graph.add_edges_from(_row_edges(self.tables))
        return graph

    @cached_property
    def full_graph(self) -> nx.Graph:
        if not self.succ:
            return self.sigma_graph
        graph = self.sigma_graph.copy()
        graph.add_edges_from(sorted((x, y) for x, y in self.succ if x != y))
        return graph

    def graph(self, include_succ: bool) -> nx.Graph:
        return self.full_graph if include_succ else self.sigma_graph


@dataclass(frozen=True)
class PointedStructure:
    structure: Structure
    center: Element = field(default=0)

    def __post_init__(self):
        if not 0 <= self.center < self.structure.size:
            raise InputError(
                settings.errors.out_of_range.format(
                    self.center, self.structure.size - 1
                ),
                ["center"],
            )


def _check_range(row: Collection[Element], size: int, loc: list):
    for x in row:
        if not isinstance(x, int) or not 0 <= x < size:
            raise InputError(settings.errors.out_of_range.format(x, size - 1), loc)


def _row_edges(tables: Iterable[FrozenSet[Row]]) -> Iterable[Tuple[int, int]]:
    edges = set()
    for table in tables:
        for row in table:
            for i, x in enumerate(row):
                for y in row[i + 1 :]:
                    if x != y:
                        edges.add((min(x, y), max(x, y)))
    return sorted(edges)
