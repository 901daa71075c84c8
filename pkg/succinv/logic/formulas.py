__all__ = [
    "And",
    "Atom",
    "Eq",
    "Exists",
    "Forall",
    "Formula",
    "Not",
    "Or",
    "check_formula",
    "free_variables",
    "quantifier_rank",
    "relation_names",
    "variables",
]
from dataclasses import dataclass
from typing import FrozenSet, Optional, Set, Tuple, Union

from succinv.errors import InputError
from succinv.structures import Signature

SUCC, LIN_SUCC = "S", "Sbar"


@dataclass(frozen=True)
class Atom:
    relation: str
    variables: Tuple[str, ...]


@dataclass(frozen=True)
class Eq:
    left: str
    right: str


@dataclass(frozen=True)
class Not:
    formula: "Formula"


@dataclass(frozen=True)
class And:
    parts: Tuple["Formula", ...]


@dataclass(frozen=True)
class Or:
    parts: Tuple["Formula", ...]


@dataclass(frozen=True)
class Exists:
    variable: str
    formula: "Formula"


@dataclass(frozen=True)
class Forall:
    variable: str
    formula: "Formula"


Formula = Union[Atom, Eq, Not, And, Or, Exists, Forall]
Quantifier = (Exists, Forall)


def free_variables(phi: Formula) -> FrozenSet[str]:
    if isinstance(phi, Atom):
        return frozenset(phi.variables)
    if isinstance(phi, Eq):
        return frozenset((phi.left, phi.right))
    if isinstance(phi, Not):
        return free_variables(phi.formula)
    if isinstance(phi, (And, Or)):
        return frozenset().union(*map(free_variables, phi.parts))
    if isinstance(phi, Quantifier):
        return free_variables(phi.formula) - {phi.variable}
    raise TypeError(f"not a formula: {phi!r}")


def variables(phi: Formula) -> FrozenSet[str]:
    """Free and bound variables."""
    if isinstance(phi, Quantifier):
        return variables(phi.formula) | {phi.variable}
    if isinstance(phi, Not):
        return variables(phi.formula)
    if isinstance(phi, (And, Or)):
        return frozenset().union(*map(variables, phi.parts))
    return free_variables(phi)


def quantifier_rank(phi: Formula) -> int:
    if isinstance(phi, Quantifier):
        return 1 + quantifier_rank(phi.formula)
    if isinstance(phi, Not):
        return quantifier_rank(phi.formula)
    if isinstance(phi, (And, Or)):
        return max(map(quantifier_rank, phi.parts), default=0)
    return 0


def relation_names(phi: Formula) -> Set[str]:
    if isinstance(phi, Atom):
        return {phi.relation}
    if isinstance(phi, Eq):
        return set()
    if isinstance(phi, (Not, *Quantifier)):
        return relation_names(phi.formula)
    return set().union(*map(relation_names, phi.parts))


def _atoms(phi: Formula):
    if isinstance(phi, Atom):
        yield phi
    elif isinstance(phi, (Not, *Quantifier)):
        yield from _atoms(phi.formula)
    elif isinstance(phi, (And, Or)):
        for part in phi.parts:
            yield from _atoms(part)


def check_formula(
    phi: Formula, signature: Signature, succ: Optional[str] = None, sentence=True
):
    """Reject unknown relations, wrong arities and, for sentences, free variables.

    ``succ`` names the successor symbol allowed besides the signature, if any.
    """
    for atom in _atoms(phi):
        if atom.relation in (SUCC, LIN_SUCC):
            if atom.relation != succ:
                raise InputError(f"successor symbol {atom.relation!r} not allowed")
            arity = 2
        else:
            arity = signature.arity(atom.relation)
        if len(atom.variables) != arity:
            raise InputError(
                f"atom {atom.relation} with {len(atom.variables)} arguments, "
                f"arity {arity}"
            )
    if sentence and free_variables(phi):
        raise InputError(f"free variables {sorted(free_variables(phi))}")
