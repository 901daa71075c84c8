import random

import pytest

from succinv.errors import InputError
from succinv.gaifman import neighborhood
from succinv.registry import (
    NeighborhoodType,
    TypeCensus,
    canonical_type,
    element_types,
    threshold_equivalent,
    type_census,
)
from succinv.structures import PointedStructure, Structure
from tests.structures import GRAPH, directed_cycle, mix, random_graph, tri


def path(n: int) -> Structure:
    return Structure.build(GRAPH, n, {"E": [(i, i + 1) for i in range(n - 1)]})


def test_canonical_type():
    first = canonical_type(PointedStructure(tri(1), 0))
    rotated = canonical_type(PointedStructure(tri(1).relabel([2, 0, 1]), 2))
    assert first == rotated
    assert first.radius == 1 and not first.over_succ
    end = canonical_type(PointedStructure(path(3), 0))
    middle = canonical_type(PointedStructure(path(3), 1))
    assert end != middle
    assert end.radius == 2 and middle.radius == 1


def test_type_identity():
    p = PointedStructure(tri(1), 0)
    plain = canonical_type(p, 1, over_succ=False)
    enriched = canonical_type(p, 1, over_succ=True)
    assert plain.id == enriched.id
    assert plain != enriched
    assert plain != canonical_type(p, 2, over_succ=False)
    assert str(plain) == plain.hex[:12]
    assert len(plain.hex) == 64


def test_stable_under_relabeling():
    rng = random.Random(0)
    for _ in range(200):
        s = random_graph(rng, rng.randint(1, 12), 0.1)
        x = rng.randrange(s.size)
        perm = list(s.universe)
        rng.shuffle(perm)
        for r in (1, 2):
            assert canonical_type(neighborhood(s, x, r), r) == canonical_type(
                neighborhood(s.relabel(perm), perm[x], r), r
            )


def test_cycle_vertices_share_a_type():
    assert len(set(element_types(directed_cycle(6), 1))) == 1


@pytest.mark.parametrize(
    "s, counts",
    [(tri(30), [90]), (mix(71), [4, 213]), (Structure.build(GRAPH, 0), [])],
)
def test_census(s, counts):
    census = type_census(s, 1)
    assert sorted(n for _, n in census.counts) == counts
    assert census.total == s.size == sum(counts)
    assert sorted(census.as_dict().values()) == counts


def test_census_with_succ():
    s = tri(2).with_succ([(0, 3), (3, 0)])
    assert sorted(n for _, n in type_census(s, 1, include_succ=True).counts) == [2, 4]
    assert all(tp.over_succ for tp, _ in type_census(s, 1, True).counts)
    assert [n for _, n in type_census(s, 1).counts] == [6]


def census_of(*counts) -> TypeCensus:
    types = [NeighborhoodType(bytes([i]), 1, False) for i in range(len(counts))]
    return TypeCensus(1, tuple(zip(types, counts)), sum(counts))


@pytest.mark.parametrize(
    "counts1, counts2, t, expected",
    [
        ((5, 7), (5, 7), 1, True),
        ((5,), (7,), 4, True),
        ((3,), (4,), 4, False),
        ((5, 0), (5, 1), 10, False),
        ((5, 4), (5, 9), 3, True),
        ((5,), (5, 2), 3, False),
    ],
)
def test_threshold_equivalent(counts1, counts2, t, expected):
    c1, c2 = census_of(*counts1), census_of(*counts2)
    assert threshold_equivalent(c1, c2, t) is expected
    assert threshold_equivalent(c2, c1, t) is expected


def test_threshold_monotone():
    c1, c2 = census_of(5, 9), census_of(5, 12)
    assert threshold_equivalent(c1, c2, 8)
    assert all(threshold_equivalent(c1, c2, t) for t in range(1, 8))


def test_threshold_radius_mismatch():
    with pytest.raises(InputError):
        threshold_equivalent(type_census(tri(1), 1), type_census(tri(1), 2), 1)


def test_symmetric_neighborhoods():
    # complete binary tree of depth 6, edges both ways
    edges = [(x, c) for x in range(63) for c in (2 * x + 1, 2 * x + 2) if c < 127]
    tree = Structure.build(GRAPH, 127, {"E": edges + [(y, x) for x, y in edges]})
    for r in (3, 4):
        tp = canonical_type(neighborhood(tree, 0, r), r)
        perm = list(tree.universe)
        random.Random(r).shuffle(perm)
        assert tp == canonical_type(neighborhood(tree.relabel(perm), perm[0], r), r)
    assert canonical_type(neighborhood(tree, 1, 2), 2) == canonical_type(
        neighborhood(tree, 2, 2), 2
    )
    leaves = {canonical_type(neighborhood(tree, x, 3), 3) for x in range(63, 127)}
    assert len(leaves) == 1
