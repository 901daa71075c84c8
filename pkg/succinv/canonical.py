"""Canonical labeling by colour refinement and individualization.

The search tree is pruned with the automorphisms discovered at its leaves:
two leaves with the same encoding give an automorphism, and a child lying in
the orbit of an explored sibling, under automorphisms fixing the current
path, only repeats encodings already seen.
"""
__all__ = ["canonical_labeling", "canonical_token", "find_isomorphism"]
import hashlib
from collections import Counter
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from succinv.structures import Element, Row, Structure

Colouring = List[int]
Encoding = tuple
Incidence = Sequence[Sequence[Tuple[int, Row]]]
Permutation = Tuple[int, ...]


def _rank(values: Sequence) -> Colouring:
    index = {v: i for i, v in enumerate(sorted(set(values)))}
    return [index[v] for v in values]


def _incidence(s: Structure) -> Incidence:
    result: List[List[Tuple[int, Row]]] = [[] for _ in s.universe]
    rows = [(i, row) for i, table in enumerate(s.tables) for row in table]
    rows.extend((len(s.tables), pair) for pair in (s.succ or ()))
    for i, row in sorted(rows):
        for x in set(row):
            result[x].append((i, row))
    return result


def _refine(colours: Colouring, incidence: Incidence) -> Colouring:
    cells = len(set(colours))
    while True:
        signatures = [
            (
                colours[x],
                tuple(
                    sorted(
                        (
                            i,
                            tuple(p for p, y in enumerate(row) if y == x),
                            tuple(colours[y] for y in row),
                        )
                        for i, row in incidence[x]
                    )
                ),
            )
            for x in range(len(colours))
        ]
        colours = _rank(signatures)
        refined = len(set(colours))
        if refined == cells:
            return colours
        cells = refined


def _individualize(
    colours: Colouring, x: Element, incidence: Incidence
) -> Colouring:
    cell = colours[x]
    split = [
        2 * c + (1 if c == cell and y != x else 0) for y, c in enumerate(colours)
    ]
    return _refine(_rank(split), incidence)


def _encode(s: Structure, labels: Sequence[int], center: Optional[Element]):
    tables = tuple(
        tuple(sorted(tuple(labels[x] for x in row) for row in table))
        for table in s.tables
    )
    succ = tuple(sorted((labels[x], labels[y]) for x, y in (s.succ or ())))
    return (
        s.size,
        -1 if center is None else labels[center],
        tables,
        succ,
    )


def _orbits(n: int, generators: Sequence[Permutation], fixed: Sequence[Element]):
    """Orbit representatives under the generators fixing ``fixed`` pointwise."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gamma in generators:
        if any(gamma[x] != x for x in fixed):
            continue
        for x in range(n):
            a, b = find(x), find(gamma[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(x) for x in range(n)]


class _Search:
    def __init__(self, s: Structure, center: Optional[Element]):
        self.structure = s
        self.center = center
        self.incidence = _incidence(s)
        self.generators: List[Permutation] = []
        self.leaves: Dict[Encoding, Permutation] = {}
        self.best: Optional[Tuple[Encoding, Permutation]] = None
        self.path: List[Element] = []
        self.explored: List[List[Element]] = []
        self.abort_to: Optional[int] = None

    def redundant(self, level: int, x: Element) -> bool:
        if not self.generators or not self.explored[level]:
            return False
        orbit = _orbits(self.structure.size, self.generators, self.path[:level])
        return any(orbit[y] == orbit[x] for y in self.explored[level])

    def leaf(self, colours: Colouring):
        labels = tuple(colours)
        encoding = _encode(self.structure, labels, self.center)
        known = self.leaves.get(encoding)
        if known is None:
            self.leaves[encoding] = labels
            if self.best is None or encoding < self.best[0]:
                self.best = (encoding, labels)
            return
        position = {label: y for y, label in enumerate(labels)}
        self.generators.append(tuple(position[known[x]] for x in range(len(known))))
        for level, x in enumerate(self.path):
            if self.redundant(level, x):
                self.abort_to = level
                return

    def run(self, colours: Colouring):
        counts = Counter(colours)
        target = next((c for c in sorted(counts) if counts[c] > 1), None)
        if target is None:
            self.leaf(colours)
            return
        children = []
        for x in self.structure.universe:
            if colours[x] == target:
                child = _individualize(colours, x, self.incidence)
                counts = Counter(child)
                children.append((tuple(counts[c] for c in sorted(counts)), x, child))
        least = min(inv for inv, _, _ in children)
        level = len(self.path)
        self.explored.append([])
        for inv, x, child in children:
            if inv != least or self.redundant(level, x):
                continue
            self.path.append(x)
            self.run(child)
            self.path.pop()
            self.explored[level].append(x)
            if self.abort_to is not None:
                if self.abort_to < level:
                    break
                self.abort_to = None
        self.explored.pop()


def canonical_labeling(
    s: Structure, center: Optional[Element] = None
) -> Tuple[Encoding, Tuple[int, ...]]:
    """Return the canonical encoding of ``s`` and the labeling producing it.

    Two structures (pointed when ``center`` is given) get equal encodings iff
    they are isomorphic; ``labeling[x]`` is the canonical position of ``x``.
    """
    search = _Search(s, center)
    seed = [0 if x == center else 1 for x in s.universe]
    search.run(_refine(_rank(seed), search.incidence))
    assert search.best is not None
    return search.best


def canonical_token(s: Structure, center: Optional[Element] = None) -> bytes:
    encoding, _ = canonical_labeling(s, center)
    return hashlib.sha256(repr((s.signature.relations, encoding)).encode()).digest()


def _row_graph(s: Structure, center: Optional[Element]) -> nx.Graph:
    # elements, rows and row positions as labelled nodes
    graph = nx.Graph()
    for x in s.universe:
        graph.add_node(("x", x), label=("center" if x == center else "element",))
    rows = [(i, row) for i, table in enumerate(s.tables) for row in table]
    rows.extend((len(s.tables), pair) for pair in (s.succ or ()))
    for i, row in rows:
        graph.add_node(("r", i, row), label=("row", i))
        for p, x in enumerate(row):
            graph.add_node(("p", i, row, p), label=("position", i, p))
            graph.add_edge(("r", i, row), ("p", i, row, p))
            graph.add_edge(("p", i, row, p), ("x", x))
    return graph


def find_isomorphism(
    s1: Structure,
    s2: Structure,
    center1: Optional[Element] = None,
    center2: Optional[Element] = None,
) -> Optional[Permutation]:
    """An isomorphism ``pi`` from ``s1`` onto ``s2`` (``pi[center1] == center2``).

    Matches the labelled row graphs of both structures with VF2, so every
    relation row, and the successor when present, is preserved both ways.
    """
    if s1.signature != s2.signature or s1.size != s2.size:
        return None
    if (center1 is None) != (center2 is None):
        return None
    matcher = GraphMatcher(
        _row_graph(s1, center1),
        _row_graph(s2, center2),
        node_match=lambda a, b: a["label"] == b["label"],
    )
    if not matcher.is_isomorphic():
        return None
    return tuple(matcher.mapping[("x", x)][1] for x in s1.universe)
