import random

import pytest

from succinv.errors import InputError
from succinv.logic import (
    And,
    Atom,
    Eq,
    Exists,
    Forall,
    Not,
    Or,
    check_formula,
    format_formula,
    free_variables,
    parse_formula,
    quantifier_rank,
)
from succinv.logic.formulas import relation_names, variables
from succinv.structures import Signature
from tests.structures import GRAPH, random_sentence

TRIANGLE = "(exists x (exists y (exists z (and (E x y) (E y z) (E z x)))))"


def test_parse():
    assert parse_formula("(E x y)") == Atom("E", ("x", "y"))
    assert parse_formula(" (= x y) ") == Eq("x", "y")
    assert parse_formula("(forall x (not (E x x)))") == Forall(
        "x", Not(Atom("E", ("x", "x")))
    )
    assert parse_formula("(or (P x) (and))") == Or((Atom("P", ("x",)), And(())))
    phi = parse_formula(TRIANGLE)
    assert isinstance(phi, Exists) and quantifier_rank(phi) == 3


@pytest.mark.parametrize(
    "text",
    [
        "",
        "E x y",
        "(E x y",
        "(E x y))",
        "()",
        "(exists x)",
        "(exists (x) (E x x))",
        "(not (E x y) (E y x))",
        "(= x)",
        "((E) x)",
        "(E (x) y)",
    ],
)
def test_parse_errors(text):
    with pytest.raises(InputError):
        parse_formula(text)


def test_format_round_trip():
    assert format_formula(parse_formula(TRIANGLE)) == TRIANGLE
    rng = random.Random(0)
    for _ in range(100):
        phi = random_sentence(rng, rng.randint(1, 3), ("E", "S"))
        assert parse_formula(format_formula(phi)) == phi


def test_variables_and_rank():
    phi = parse_formula("(and (exists x (E x y)) (forall y (or (= y z) (P y))))")
    assert free_variables(phi) == {"y", "z"}
    assert variables(phi) == {"x", "y", "z"}
    assert quantifier_rank(phi) == 1
    assert relation_names(phi) == {"E", "P"}
    assert quantifier_rank(parse_formula(TRIANGLE)) == 3
    assert quantifier_rank(parse_formula("(not (exists x (forall y (E x y))))")) == 2


def test_check_formula():
    check_formula(parse_formula(TRIANGLE), GRAPH)
    check_formula(parse_formula("(E x y)"), GRAPH, sentence=False)
    check_formula(parse_formula("(exists x (S x x))"), GRAPH, succ="S")
    with pytest.raises(InputError):
        check_formula(parse_formula("(E x y)"), GRAPH)
    with pytest.raises(InputError):
        check_formula(parse_formula("(exists x (S x x))"), GRAPH)
    with pytest.raises(InputError):
        check_formula(parse_formula("(exists x (Sbar x x))"), GRAPH, succ="S")
    with pytest.raises(InputError):
        check_formula(parse_formula("(exists x (E x))"), GRAPH)
    with pytest.raises(InputError):
        check_formula(parse_formula("(exists x (F x x))"), GRAPH)
    with pytest.raises(InputError):
        check_formula(parse_formula("(exists x (S x x x))"), Signature(()), "S")
