__all__ = [
    "And",
    "Atom",
    "CheckResult",
    "Eq",
    "Exists",
    "Forall",
    "Formula",
    "Not",
    "Or",
    "VerificationReport",
    "check_formula",
    "circular_to_linear",
    "ef_equivalent",
    "format_formula",
    "free_variables",
    "hintikka_sentence",
    "is_circular_successor",
    "is_linear_successor",
    "linear_to_circular",
    "linsucc_to_succ",
    "model_check",
    "parse_formula",
    "quantifier_rank",
    "satisfying_assignments",
    "succ_to_linsucc",
    "verify_weave",
]

from .formulas import (
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
    quantifier_rank,
)
from .games import ef_equivalent
from .model_checking import hintikka_sentence, model_check, satisfying_assignments
from .rewriting import linsucc_to_succ, succ_to_linsucc
from .successors import (
    circular_to_linear,
    is_circular_successor,
    is_linear_successor,
    linear_to_circular,
)
from .syntax import format_formula, parse_formula
from .verification import CheckResult, VerificationReport, verify_weave
