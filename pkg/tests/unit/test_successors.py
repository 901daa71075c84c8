import pytest

from succinv.errors import InputError
from succinv.logic import (
    circular_to_linear,
    is_circular_successor,
    is_linear_successor,
    linear_to_circular,
)
from tests.structures import circular_successors


@pytest.mark.parametrize(
    "pairs, n, expected",
    [
        ({(0, 1), (1, 2), (2, 0)}, 3, True),
        ({(0, 1), (1, 0), (2, 3), (3, 2)}, 4, False),
        ({(0, 0), (1, 1)}, 2, False),
        ({(0, 0)}, 1, True),
        (set(), 1, False),
        (set(), 0, True),
        ({(0, 1), (1, 2)}, 3, False),
        ({(0, 1), (1, 2), (2, 0), (0, 2)}, 3, False),
        ({(0, 1), (1, 3), (3, 0)}, 3, False),
    ],
)
def test_is_circular_successor(pairs, n, expected):
    assert is_circular_successor(pairs, n) is expected


@pytest.mark.parametrize(
    "pairs, n, expected",
    [
        ({(0, 1), (1, 2)}, 3, True),
        ({(2, 0), (0, 1)}, 3, True),
        (set(), 1, True),
        (set(), 0, True),
        ({(0, 1), (1, 0)}, 3, False),
        ({(0, 1), (1, 2), (2, 0)}, 3, False),
        ({(0, 1)}, 3, False),
    ],
)
def test_is_linear_successor(pairs, n, expected):
    assert is_linear_successor(pairs, n) is expected


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_cut_and_close(n):
    for succ in circular_successors(n):
        pairs = set(enumerate(succ))
        assert is_circular_successor(pairs, n)
        for minimum in range(n):
            linear = circular_to_linear(pairs, minimum)
            assert is_linear_successor(linear, n)
            assert all(y != minimum for _, y in linear)
            assert linear_to_circular(linear, n) == pairs


def test_close_errors():
    with pytest.raises(InputError):
        linear_to_circular({(0, 1), (1, 0)}, 3)
    assert linear_to_circular(set(), 0) == frozenset()
    assert linear_to_circular(set(), 1) == {(0, 0)}
