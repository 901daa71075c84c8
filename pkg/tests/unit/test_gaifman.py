import math
import random

import networkx as nx
import pytest

from succinv.canonical import canonical_token
from succinv.errors import InputError
from succinv.gaifman import (
    ball,
    gaifman_distance,
    gaifman_neighbors,
    n_bound,
    neighborhood,
    structure_degree,
)
from succinv.structures import Signature, Structure
from tests.structures import GRAPH, directed_cycle, random_graph, tri

TERNARY = Signature.of({"R": 3})


def test_neighbors():
    assert gaifman_neighbors(Structure.build(GRAPH, 2, {"E": [(0, 1)]}), 0) == {1}
    assert gaifman_neighbors(Structure.build(TERNARY, 3, {"R": [(0, 1, 2)]}), 0) == {
        1,
        2,
    }
    assert gaifman_neighbors(Structure.build(GRAPH, 1, {"E": [(0, 0)]}), 0) == set()
    with pytest.raises(InputError):
        gaifman_neighbors(tri(1), 3)


def test_neighbors_with_succ():
    s = Structure.build(GRAPH, 3, {"E": [(0, 1)]}, succ=[(2, 0)])
    assert gaifman_neighbors(s, 0) == {1}
    assert gaifman_neighbors(s, 0, include_succ=True) == {1, 2}


def test_distance():
    assert gaifman_distance(tri(1), 0, 2) == 1
    two_edges = Structure.build(GRAPH, 4, {"E": [(0, 1), (2, 3)]})
    assert gaifman_distance(two_edges, 0, 3) == math.inf
    for x in range(3):
        assert gaifman_distance(tri(1), x, x) == 0
    with pytest.raises(InputError):
        gaifman_distance(tri(1), 0, 7)


def test_distance_is_a_metric():
    rng = random.Random(0)
    for _ in range(30):
        s = random_graph(rng, rng.randint(1, 10), 0.15)
        oracle = dict(nx.all_pairs_shortest_path_length(s.sigma_graph))
        for x in s.universe:
            for y in s.universe:
                d = gaifman_distance(s, x, y)
                assert d == oracle[x].get(y, math.inf)
                assert d == gaifman_distance(s, y, x)
                for z in s.universe:
                    assert d <= gaifman_distance(s, x, z) + gaifman_distance(s, z, y)


def test_ball():
    assert ball(tri(2), 4, 0) == {4}
    assert ball(tri(1), 0, 1) == {0, 1, 2}
    assert ball(directed_cycle(4), 0, 1) == {0, 1, 3}


def test_neighborhood():
    p = neighborhood(directed_cycle(4), 0, 1)
    assert p.center == 0
    assert p.structure.size == 3
    # 0 -> 0, 1 -> 1, 3 -> 2
    assert p.structure.table("E") == {(0, 1), (2, 0)}
    loop = Structure.build(GRAPH, 2, {"E": [(0, 0), (0, 1)]})
    point = neighborhood(loop, 0, 0)
    assert point.structure.size == 1
    assert point.structure.table("E") == {(0, 0)}
    whole = neighborhood(tri(1), 1, 1)
    assert whole.structure.size == 3


def test_neighborhood_restriction():
    rng = random.Random(1)
    for _ in range(20):
        s = random_graph(rng, rng.randint(1, 9), 0.2)
        for x in s.universe:
            p = neighborhood(s, x, 2)
            inner = neighborhood(p.structure, p.center, 1)
            expected = neighborhood(s, x, 1)
            assert canonical_token(inner.structure, inner.center) == canonical_token(
                expected.structure, expected.center
            )


def test_degree():
    assert structure_degree(tri(5)) == 2
    assert structure_degree(Structure.build(TERNARY, 3, {"R": [(0, 1, 2)]})) == 2
    assert structure_degree(Structure.build(GRAPH, 0)) == 0
    s = Structure.build(GRAPH, 3, {"E": [(0, 1)]}, succ=[(0, 2)])
    assert structure_degree(s) == 1
    assert structure_degree(s, include_succ=True) == 2


@pytest.mark.parametrize(
    "d, r, expected",
    [(2, 3, 7), (3, 2, 10), (4, 1, 5), (4, 2, 17), (4, 3, 53), (0, 4, 1), (1, 3, 2)]
    + [(d, 0, 1) for d in range(5)],
)
def test_n_bound(d, r, expected):
    assert n_bound(d, r) == expected


def test_balls_within_bound():
    rng = random.Random(2)
    for _ in range(40):
        s = random_graph(rng, rng.randint(1, 10), 0.12)
        d = structure_degree(s)
        for x in s.universe:
            for r in range(4):
                assert len(ball(s, x, r)) <= n_bound(d, r)
