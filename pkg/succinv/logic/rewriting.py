__all__ = ["linsucc_to_succ", "succ_to_linsucc"]
from typing import Callable, Set

from succinv.errors import InputError
from succinv.logic.formulas import (
    LIN_SUCC,
    SUCC,
    And,
    Atom,
    Eq,
    Exists,
    Formula,
    Not,
    Or,
    Quantifier,
    relation_names,
    variables,
)


def _fresh(taken: Set[str], base: str) -> str:
    candidate, i = base, 0
    while candidate in taken:
        i += 1
        candidate = f"{base}{i}"
    return candidate


def _map_atoms(phi: Formula, rewrite: Callable[[Atom], Formula]) -> Formula:
    if isinstance(phi, Atom):
        return rewrite(phi)
    if isinstance(phi, Eq):
        return phi
    if isinstance(phi, Not):
        return Not(_map_atoms(phi.formula, rewrite))
    if isinstance(phi, (And, Or)):
        return type(phi)(tuple(_map_atoms(part, rewrite) for part in phi.parts))
    if isinstance(phi, Quantifier):
        return type(phi)(phi.variable, _map_atoms(phi.formula, rewrite))
    raise TypeError(f"not a formula: {phi!r}")


def succ_to_linsucc(phi: Formula) -> Formula:
    """Replace S(x,y) by Sbar(x,y) | !Ez (Sbar(x,z) | Sbar(z,y)).

    The result over a linear successor agrees with ``phi`` over the circular
    successor closing it.
    """
    if LIN_SUCC in relation_names(phi):
        raise InputError(f"formula already uses {LIN_SUCC}")
    z = _fresh(set(variables(phi)), "z")

    def rewrite(atom: Atom) -> Formula:
        if atom.relation != SUCC:
            return atom
        if len(atom.variables) != 2:
            raise InputError(f"{SUCC} atom with {len(atom.variables)} arguments")
        x, y = atom.variables
        wraps = Or((Atom(LIN_SUCC, (x, z)), Atom(LIN_SUCC, (z, y))))
        return Or((Atom(LIN_SUCC, (x, y)), Not(Exists(z, wraps))))

    return _map_atoms(phi, rewrite)


def linsucc_to_succ(psi: Formula) -> Formula:
    """Guess the minimum and cut the circular successor open before it."""
    if SUCC in relation_names(psi):
        raise InputError(f"formula already uses {SUCC}")
    minimum = _fresh(set(variables(psi)), "min")

    def rewrite(atom: Atom) -> Formula:
        if atom.relation != LIN_SUCC:
            return atom
        if len(atom.variables) != 2:
            raise InputError(f"{LIN_SUCC} atom with {len(atom.variables)} arguments")
        x, y = atom.variables
        return And((Atom(SUCC, (x, y)), Not(Eq(y, minimum))))

    return Exists(minimum, _map_atoms(psi, rewrite))
