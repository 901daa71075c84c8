"""Parenthesized prefix syntax: ``(exists x (and (E x y) (not (= x y))))``."""
__all__ = ["format_formula", "parse_formula"]
import re
from typing import List, Union

from succinv.errors import InputError
from succinv.logic.formulas import And, Atom, Eq, Exists, Forall, Formula, Not, Or

_TOKEN = re.compile(r"\s*(?:([()])|([^\s()]+))")

Tree = Union[str, List["Tree"]]


def _tokens(text: str) -> List[str]:
    tokens, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:  # pragma: no cover
            raise InputError(f"unexpected character at offset {pos}")
        tokens.append(match.group(1) or match.group(2))
        pos = match.end()
    return tokens


def _tree(tokens: List[str], pos: int):
    if pos >= len(tokens):
        raise InputError("unexpected end of formula")
    token = tokens[pos]
    if token == ")":
        raise InputError(f"unexpected ')' at token {pos}")
    if token != "(":
        return token, pos + 1
    items: List[Tree] = []
    pos += 1
    while pos < len(tokens) and tokens[pos] != ")":
        item, pos = _tree(tokens, pos)
        items.append(item)
    if pos >= len(tokens):
        raise InputError("missing ')'")
    return items, pos + 1


def _variable(tree: Tree) -> str:
    if not isinstance(tree, str):
        raise InputError(f"expected a variable, got {tree!r}")
    return tree


def _formula(tree: Tree) -> Formula:
    if isinstance(tree, str) or not tree:
        raise InputError(f"expected a parenthesized formula, got {tree!r}")
    head, *args = tree
    if not isinstance(head, str):
        raise InputError(f"expected an operator, got {head!r}")
    if head in ("exists", "forall"):
        if len(args) != 2:
            raise InputError(f"{head} takes a variable and a formula")
        cls = Exists if head == "exists" else Forall
        return cls(_variable(args[0]), _formula(args[1]))
    if head in ("and", "or"):
        return (And if head == "and" else Or)(tuple(map(_formula, args)))
    if head == "not":
        if len(args) != 1:
            raise InputError("not takes one formula")
        return Not(_formula(args[0]))
    if head == "=":
        if len(args) != 2:
            raise InputError("= takes two variables")
        return Eq(_variable(args[0]), _variable(args[1]))
    return Atom(head, tuple(map(_variable, args)))


def parse_formula(text: str) -> Formula:
    tokens = _tokens(text)
    tree, pos = _tree(tokens, 0)
    if pos != len(tokens):
        raise InputError(f"trailing tokens after formula: {tokens[pos:]}")
    return _formula(tree)


def format_formula(phi: Formula) -> str:
    if isinstance(phi, Atom):
        return "(" + " ".join((phi.relation, *phi.variables)) + ")"
    if isinstance(phi, Eq):
        return f"(= {phi.left} {phi.right})"
    if isinstance(phi, Not):
        return f"(not {format_formula(phi.formula)})"
    if isinstance(phi, (And, Or)):
        op = "and" if isinstance(phi, And) else "or"
        return "(" + " ".join((op, *map(format_formula, phi.parts))) + ")"
    op = "exists" if isinstance(phi, Exists) else "forall"
    return f"({op} {phi.variable} {format_formula(phi.formula)})"
