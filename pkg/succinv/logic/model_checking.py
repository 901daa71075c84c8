__all__ = ["hintikka_sentence", "model_check", "satisfying_assignments"]
from itertools import product
from typing import Dict, FrozenSet, List, Set, Tuple

from succinv.errors import InputError
from succinv.logic.formulas import (
    LIN_SUCC,
    SUCC,
    And,
    Atom,
    Eq,
    Exists,
    Forall,
    Formula,
    Not,
    Or,
    check_formula,
    free_variables,
    relation_names,
)
from succinv.structures import Structure

Tables = Dict[str, FrozenSet[Tuple[int, ...]]]


def _tables(s: Structure, phi: Formula) -> Tables:
    names = relation_names(phi)
    if SUCC in names and LIN_SUCC in names:
        raise InputError("formula mixes S and Sbar")
    succ_name = SUCC if SUCC in names else LIN_SUCC if LIN_SUCC in names else None
    if succ_name is not None and s.succ is None:
        raise InputError(f"formula uses {succ_name} but the structure has none")
    check_formula(phi, s.signature, succ_name, sentence=False)
    tables = s.relations()
    if succ_name is not None:
        tables[succ_name] = frozenset(s.succ or ())
    return tables


def _holds(s: Structure, tables: Tables, phi: Formula, env: Dict[str, int]) -> bool:
    if isinstance(phi, Atom):
        return tuple(env[v] for v in phi.variables) in tables[phi.relation]
    if isinstance(phi, Eq):
        return env[phi.left] == env[phi.right]
    if isinstance(phi, Not):
        return not _holds(s, tables, phi.formula, env)
    if isinstance(phi, And):
        return all(_holds(s, tables, part, env) for part in phi.parts)
    if isinstance(phi, Or):
        return any(_holds(s, tables, part, env) for part in phi.parts)
    check = any if isinstance(phi, Exists) else all
    return check(
        _holds(s, tables, phi.formula, {**env, phi.variable: x}) for x in s.universe
    )


def model_check(s: Structure, phi: Formula) -> bool:
    """Truth of the sentence ``phi`` in ``s``.

    ``S`` and ``Sbar`` atoms both read the successor relation of ``s``.
    """
    tables = _tables(s, phi)
    if free_variables(phi):
        raise InputError(f"free variables {sorted(free_variables(phi))}")
    return _holds(s, tables, phi, {})


Relation = Tuple[Tuple[str, ...], Set[Tuple[int, ...]]]


def _extend(rel: Relation, columns: Tuple[str, ...], n: int) -> Set[Tuple[int, ...]]:
    """Cylindrify ``rel`` to ``columns``, a superset of its own columns."""
    own, rows = rel
    position = [own.index(c) if c in own else None for c in columns]
    missing = [i for i, p in enumerate(position) if p is None]
    result = set()
    for row in rows:
        for extra in product(range(n), repeat=len(missing)):
            values = dict(zip(missing, extra))
            result.add(
                tuple(
                    row[p] if p is not None else values[i]
                    for i, p in enumerate(position)
                )
            )
    return result


def _evaluate(s: Structure, tables: Tables, phi: Formula) -> Relation:
    n = s.size
    if isinstance(phi, Atom):
        columns = tuple(sorted(set(phi.variables)))
        rows = set()
        for row in tables[phi.relation]:
            env: Dict[str, int] = {}
            if all(env.setdefault(v, x) == x for v, x in zip(phi.variables, row)):
                rows.add(tuple(env[c] for c in columns))
        return columns, rows
    if isinstance(phi, Eq):
        columns = tuple(sorted({phi.left, phi.right}))
        if len(columns) == 1:
            return columns, {(x,) for x in range(n)}
        return columns, {(x, x) for x in range(n)}
    if isinstance(phi, Not):
        columns, rows = _evaluate(s, tables, phi.formula)
        return columns, set(product(range(n), repeat=len(columns))) - rows
    if isinstance(phi, (And, Or)):
        parts = [_evaluate(s, tables, part) for part in phi.parts]
        columns = tuple(sorted(set().union(*(set(c) for c, _ in parts))))
        if isinstance(phi, Or):
            rows: Set[Tuple[int, ...]] = set()
            for part in parts:
                rows |= _extend(part, columns, n)
            return columns, rows
        rows = set(product(range(n), repeat=len(columns)))
        for part in parts:
            rows &= _extend(part, columns, n)
        return columns, rows
    inner = phi.formula if isinstance(phi, Exists) else Not(phi.formula)
    columns, rows = _evaluate(s, tables, inner)
    if phi.variable in columns:
        i = columns.index(phi.variable)
        columns = columns[:i] + columns[i + 1 :]
        rows = {row[:i] + row[i + 1 :] for row in rows}
    elif n == 0:
        rows = set()
    if isinstance(phi, Forall):
        rows = set(product(range(n), repeat=len(columns))) - rows
    return columns, rows


def satisfying_assignments(
    s: Structure, phi: Formula
) -> Tuple[Tuple[str, ...], FrozenSet[Tuple[int, ...]]]:
    """All assignments of the free variables (sorted) satisfying ``phi``.

    Evaluates bottom-up over relations rather than by recursion on assignments;
    a sentence holds iff the empty tuple is returned.
    """
    columns, rows = _evaluate(s, _tables(s, phi), phi)
    return columns, frozenset(rows)


def _diagram(s: Structure, elements: Tuple[int, ...]) -> List[Formula]:
    names = [f"x{i}" for i in range(len(elements))]
    literals: List[Formula] = []
    for i, j in product(range(len(elements)), repeat=2):
        if i < j:
            eq = Eq(names[i], names[j])
            literals.append(eq if elements[i] == elements[j] else Not(eq))
    relations = list(s.signature.relations)
    tables = s.relations()
    if s.succ is not None:
        relations.append((SUCC, 2))
        tables[SUCC] = s.succ
    for name, arity in relations:
        for idx in product(range(len(elements)), repeat=arity):
            atom = Atom(name, tuple(names[i] for i in idx))
            row = tuple(elements[i] for i in idx)
            literals.append(atom if row in tables[name] else Not(atom))
    return literals


def _hintikka(s: Structure, elements: Tuple[int, ...], k: int) -> Formula:
    diagram = _diagram(s, elements)
    if k == 0:
        return And(tuple(diagram))
    variable = f"x{len(elements)}"
    children = tuple(
        dict.fromkeys(_hintikka(s, (*elements, x), k - 1) for x in s.universe)
    )
    return And(
        (
            *diagram,
            *(Exists(variable, child) for child in children),
            Forall(variable, Or(children)),
        )
    )


def hintikka_sentence(s: Structure, k: int) -> Formula:
    """Rank-k sentence true exactly in the structures k-equivalent to ``s``."""
    return _hintikka(s, (), k)