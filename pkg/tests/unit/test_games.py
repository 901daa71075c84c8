import random

import pytest

from succinv.errors import InputError, ResourceError
from succinv.logic import ef_equivalent
from succinv.settings import settings
from succinv.structures import Signature, Structure
from tests.structures import (
    GRAPH,
    directed_cycle,
    random_graph,
    random_succ_pairs,
    relabeled,
    tri,
)


@pytest.mark.parametrize("k", range(4))
def test_identity(k):
    for s in (tri(2), directed_cycle(5), tri(1).with_succ([(0, 1), (1, 2)])):
        assert ef_equivalent(s, s, k)
        assert ef_equivalent(s, relabeled(s, k), k)


@pytest.mark.parametrize("k, expected", [(0, True), (1, True), (2, False), (3, False)])
def test_cycles(k, expected):
    assert ef_equivalent(directed_cycle(3), directed_cycle(4), k) is expected


def test_triangle_counts():
    # k triangles hold k but not k + 1 pairwise unrelated elements
    assert ef_equivalent(tri(1), tri(2), 1)
    assert not ef_equivalent(tri(1), tri(2), 2)
    assert ef_equivalent(tri(2), tri(3), 2)
    assert not ef_equivalent(tri(2), tri(3), 3)


def test_empty_structures():
    empty = Structure.build(GRAPH, 0)
    assert ef_equivalent(empty, empty, 3)
    assert ef_equivalent(empty, tri(1), 0)
    assert not ef_equivalent(empty, tri(1), 1)


def test_successor_relation():
    plain = tri(1)
    assert ef_equivalent(plain, plain.with_succ([]), 3)
    assert ef_equivalent(plain, plain.with_succ([(0, 1)]), 1)
    assert not ef_equivalent(plain, plain.with_succ([(0, 1)]), 2)
    forward = plain.with_succ([(0, 1)])
    assert not ef_equivalent(forward, plain.with_succ([(1, 0)]), 2)
    assert ef_equivalent(forward, plain.with_succ([(2, 0)]), 3)


def test_monotone_and_pruning():
    rng = random.Random(0)
    for _ in range(80):
        a = random_graph(rng, rng.randint(1, 4), 0.35, loops=True)
        b = random_graph(rng, rng.randint(1, 4), 0.35, loops=True)
        if rng.random() < 0.5:
            a = a.with_succ(random_succ_pairs(rng, a.size, 0.3))
            b = b.with_succ(random_succ_pairs(rng, b.size, 0.3))
        results = [ef_equivalent(a, b, k, prune=False) for k in range(4)]
        assert results == sorted(results, reverse=True)
        assert results == [ef_equivalent(a, b, k, prune=True) for k in range(4)]


def test_higher_arity():
    ternary = Signature.of({"R": 3})
    a = Structure.build(ternary, 3, {"R": [(0, 1, 2)]})
    b = Structure.build(ternary, 3, {"R": [(0, 0, 2)]})
    assert ef_equivalent(a, a, 3)
    assert not ef_equivalent(a, b, 3)
    assert ef_equivalent(a, b, 1) == ef_equivalent(a, b, 1, prune=False)


def test_errors():
    with pytest.raises(InputError):
        ef_equivalent(tri(1), Structure.build(Signature.of({"F": 2}), 3), 1)
    with pytest.raises(InputError):
        ef_equivalent(tri(1), tri(1), -1)


def test_state_budget():
    settings.ef_state_budget = 2
    try:
        with pytest.raises(ResourceError):
            ef_equivalent(tri(2), tri(2), 3)
    finally:
        settings.ef_state_budget = 2_000_000
