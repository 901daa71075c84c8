import random

import pytest

from succinv.canonical import canonical_token
from succinv.errors import InputError, ResourceError
from succinv.fractal import FractalMode, fractal_build, fractal_type_id
from succinv.gaifman import neighborhood
from succinv.layering import short_cycle_through_s
from succinv.registry import canonical_type
from succinv.settings import settings
from succinv.structures import PointedStructure, Signature, Structure
from tests.structures import GRAPH, random_graph, tri

EMPTY = Signature(())
POINT = PointedStructure(Structure.build(EMPTY, 1), 0)


def token(p: PointedStructure) -> bytes:
    return canonical_token(p.structure, p.center)


def s_path(n: int, center: int) -> PointedStructure:
    succ = [(i, i + 1) for i in range(n - 1)]
    return PointedStructure(Structure.build(EMPTY, n, {}, succ), center)


def random_types(seed: int, count: int, k: int):
    rng = random.Random(seed)
    result = []
    while len(result) < count:
        s = random_graph(rng, rng.randint(1, 6), 0.12)
        result.append(neighborhood(s, rng.randrange(s.size), k))
    return result


@pytest.mark.parametrize("mode", list(FractalMode))
def test_base_case(mode):
    for tau in random_types(0, 20, 2):
        built = fractal_build(tau, 0, mode)
        assert built.structure.succ == frozenset()
        assert token(built) == token(tau)


def test_point_unfolds_to_s_paths():
    assert token(fractal_build(POINT, 2)) == token(s_path(5, 2))
    assert token(fractal_build(POINT, 1, FractalMode.upper)) == token(s_path(2, 0))
    assert token(fractal_build(POINT, 1, FractalMode.lower)) == token(s_path(2, 1))
    assert token(fractal_build(POINT, 3, FractalMode.upper)) == token(s_path(4, 0))


def test_triangle():
    tau = neighborhood(tri(1), 0, 1)
    built = fractal_build(tau, 1)
    # the center alone gets one point above and one below
    assert built.structure.size == 5
    assert len(built.structure.succ) == 2
    built = fractal_build(tau, 2)
    assert short_cycle_through_s(built.structure, 2) is None


@pytest.mark.parametrize("k", [1, 2])
def test_layered_and_rooted_in_tau(k):
    for tau in random_types(k, 20, k):
        built = fractal_build(tau, k)
        assert short_cycle_through_s(built.structure, k) is None
        sigma = neighborhood(built.structure, built.center, k)
        assert token(sigma) == token(tau)


@pytest.mark.parametrize("k", [1, 2])
def test_radius_coherence(k):
    for tau in random_types(10 + k, 20, k):
        built = fractal_build(tau, k)
        (above,) = [y for x, y in built.structure.succ if x == built.center]
        restricted = neighborhood(built.structure, above, k - 1, include_succ=True)
        smaller = neighborhood(tau.structure, tau.center, k - 1)
        assert token(restricted) == token(fractal_build(smaller, k - 1))


def test_deterministic():
    tau = neighborhood(tri(1), 0, 1)
    assert fractal_build(tau, 2) == fractal_build(tau, 2)
    tp = canonical_type(tau, 1)
    assert fractal_type_id(tp, 1) == fractal_type_id(tp, 1)


def test_build_errors():
    with pytest.raises(InputError):
        fractal_build(PointedStructure(tri(1).with_succ([(0, 1)]), 0), 1)
    path = Structure.build(GRAPH, 3, {"E": [(0, 1), (1, 2)]})
    with pytest.raises(InputError):
        fractal_build(PointedStructure(path, 0), 1)
    fractal_build(PointedStructure(path, 0), 2)


def test_budget():
    tau = neighborhood(tri(1), 0, 1)
    settings.fractal_element_budget = 10
    try:
        with pytest.raises(ResourceError):
            fractal_build(tau, 3)
    finally:
        settings.fractal_element_budget = 100_000


def test_fractal_type_id():
    point = canonical_type(POINT, 0, over_succ=False)
    assert fractal_type_id(point, 0).id == point.id
    assert fractal_type_id(point, 0).over_succ
    expected = canonical_type(s_path(3, 1), 1, over_succ=True)
    wide = canonical_type(POINT, 1, over_succ=False)
    assert fractal_type_id(wide, 1) == expected
    triangle = canonical_type(neighborhood(tri(1), 0, 1), 1, over_succ=False)
    assert fractal_type_id(triangle, 1) == canonical_type(
        fractal_build(neighborhood(tri(1), 0, 1), 1), 1, over_succ=True
    )
    assert fractal_type_id(triangle, 0) == canonical_type(
        PointedStructure(Structure.build(GRAPH, 1, {}, []), 0), 0, over_succ=True
    )


def test_fractal_type_id_errors():
    point = canonical_type(POINT, 0, over_succ=False)
    with pytest.raises(InputError):
        fractal_type_id(point, 1)
    with pytest.raises(InputError):
        fractal_type_id(canonical_type(s_path(3, 1), 1), 1)
