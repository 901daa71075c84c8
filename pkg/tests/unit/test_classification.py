import pytest

from succinv.errors import InputError, SimilarityError
from succinv.parameters import ParamsBundle
from succinv.registry import NeighborhoodType, TypeCensus, type_census
from succinv.weaving import classify_types
from tests.structures import mix, tri

TYPES = [NeighborhoodType(bytes([i]), 1, False) for i in range(4)]


def census(*counts) -> TypeCensus:
    return TypeCensus(1, tuple(zip(TYPES, counts)), sum(counts))


def test_single_frequent_type():
    params = ParamsBundle(d=2, r=1, t=2, n_occ=1)
    c = type_census(tri(30), 1)
    cls = classify_types(c, c, params.g)
    assert cls.beta == 0
    assert cls.rare == frozenset()
    assert len(cls.frequent) == 1
    assert not cls.all_rare


def test_rare_square():
    params = ParamsBundle(d=2, r=1, t=2, n_occ=2)
    c = type_census(mix(71), 1)
    cls = classify_types(c, c, params.g)
    assert cls.beta == 4
    (square,) = cls.rare
    assert c.count(square) == 4
    assert [c.count(tp) for tp in cls.frequent] == [213]
    assert cls.frequent_index(cls.frequent[0]) == 0
    assert cls.frequent_index(square) is None


def test_everything_rare():
    cls = classify_types(census(3), census(3), lambda beta: 10)
    assert cls.all_rare and cls.beta == 3
    assert cls.rare == {TYPES[0]}


def test_frequent_suffix():
    # counts 1, 2, 50, 60 against g(beta) = 2 * beta + 5
    cls = classify_types(
        census(1, 2, 50, 60), census(1, 2, 50, 70), lambda beta: 2 * beta + 5
    )
    assert cls.beta == 3
    assert cls.rare == {TYPES[0], TYPES[1]}
    assert cls.frequent == (TYPES[2], TYPES[3])


def test_ties_broken_by_id():
    cls = classify_types(census(7, 7), census(7, 7), lambda beta: 7 + (beta == 0))
    assert cls.rare == {TYPES[0]}
    assert cls.frequent == (TYPES[1],)


@pytest.mark.parametrize(
    "counts2",
    [(3, 100, 5), (4, 100), (3, 8)],
)
def test_dissimilar(counts2):
    with pytest.raises(SimilarityError):
        classify_types(census(3, 100), census(*counts2), lambda beta: 10)


def test_radius_mismatch():
    with pytest.raises(InputError):
        classify_types(census(3), TypeCensus(2, (), 0), lambda beta: 1)
