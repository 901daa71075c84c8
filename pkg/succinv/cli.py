__all__ = ["main", "run_command"]
import argparse
import logging
import os
import sys
from dataclasses import replace
from pathlib import Path
from typing import List, Optional

from succinv import cache
from succinv.errors import (
    ContractViolation,
    InfeasibilityError,
    InputError,
    ResourceError,
    SimilarityError,
)
from succinv.files import (
    CensusReport,
    EfReport,
    McReport,
    ParamsReport,
    dump_report,
    format_successor,
    parse_structure,
    parse_successor,
)
from succinv.gaifman import structure_degree
from succinv.logic import (
    ef_equivalent,
    format_formula,
    linsucc_to_succ,
    model_check,
    parse_formula,
    quantifier_rank,
    succ_to_linsucc,
    verify_weave,
)
from succinv.parameters import ParamsBundle, a_sequence, hanf_params
from succinv.registry import type_census
from succinv.settings import settings
from succinv.structures import Structure
from succinv.weaving import weave_pair

BUDGET_VARIABLE = "SUCCINV_FRACTAL_BUDGET"

logger = logging.getLogger(__name__)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _structure(path: str) -> Structure:
    loaded = parse_structure(Path(path))
    logger.info(
        "%s: element labels %s",
        path,
        ", ".join(f"{x}={label!r}" for x, label in enumerate(loaded.labels)),
    )
    return loaded.structure


def _emit(report, path: Optional[str] = None):
    text = dump_report(report)
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _params(args, g1: Structure, g2: Structure) -> ParamsBundle:
    d = args.degree
    if d is None:
        d = max(structure_degree(g1), structure_degree(g2))
    if args.alpha is not None:
        r, t = hanf_params(args.alpha, d)
    elif args.radius is None or args.threshold is None:
        raise InputError("either --alpha or both --radius and --threshold")
    else:
        r, t = args.radius, args.threshold
    n_occ = len(type_census(g1, r).counts)
    return ParamsBundle(d, r, t, n_occ, alpha=args.alpha, g_const=args.g_const)


def census(args) -> int:
    structure = _structure(args.file)
    if args.with_succ and structure.succ is None:
        raise InputError("--with-succ on a structure without succ")
    result = type_census(structure, args.radius, args.with_succ)
    _emit(CensusReport(args.radius, args.with_succ, result.total, result.as_dict()))
    return 0


def params(args) -> int:
    bundle = ParamsBundle.from_alpha(args.alpha, args.degree, args.n_occ)
    _emit(
        ParamsReport(
            bundle.d,
            bundle.r,
            bundle.t,
            bundle.n_occ,
            bundle.alpha,
            bundle.g(0),
            bundle.bounds(0),
            bundle.binding_bound(0),
            a_sequence(bundle.g, max(bundle.n_occ, 1)),
        )
    )
    return 0


def weave(args) -> int:
    g1, g2 = _structure(args.g1), _structure(args.g2)
    bundle = _params(args, g1, g2)
    result = weave_pair(g1, g2, bundle)
    Path(args.out_succ1).write_text(format_successor(result.succ1))
    Path(args.out_succ2).write_text(format_successor(result.succ2))
    report = verify_weave(result, g1, g2, bundle.r, bundle.t, args.ef_depth)
    _emit(report, args.report)
    return 0 if report.passed else 1


def verify(args) -> int:
    g1, g2 = _structure(args.g1), _structure(args.g2)
    succ1 = parse_successor(Path(args.succ1), g1.size)
    succ2 = parse_successor(Path(args.succ2), g2.size)
    bundle = _params(args, g1, g2)
    result = replace(weave_pair(g1, g2, bundle), succ1=succ1, succ2=succ2)
    report = verify_weave(result, g1, g2, bundle.r, bundle.t, args.ef_depth)
    _emit(report, args.report)
    return 0 if report.passed else 1


def ef(args) -> int:
    equivalent = ef_equivalent(_structure(args.a), _structure(args.b), args.depth)
    _emit(EfReport(args.depth, equivalent))
    return 0 if equivalent else 1


def mc(args) -> int:
    structure = _structure(args.file)
    phi = parse_formula(Path(args.formula).read_text())
    holds = model_check(structure, phi)
    _emit(McReport(format_formula(phi), quantifier_rank(phi), holds))
    return 0 if holds else 1


REWRITES = {"succ2lin": succ_to_linsucc, "lin2succ": linsucc_to_succ}


def rewrite(args) -> int:
    phi = parse_formula(Path(args.formula).read_text())
    sys.stdout.write(format_formula(REWRITES[args.direction](phi)) + "\n")
    return 0


def _weave_options(parser: argparse.ArgumentParser):
    parser.add_argument("--alpha", type=int)
    parser.add_argument("--degree", type=int)
    parser.add_argument("--radius", type=int)
    parser.add_argument("--threshold", type=int)
    parser.add_argument("--g-const", type=int)
    parser.add_argument("--ef-depth", type=int)
    parser.add_argument("--report", required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="succinv",
        description="Successor-invariant collapse on bounded-degree structures",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0)
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("census", help="neighborhood type census")
    sub.add_argument("file")
    sub.add_argument("--radius", type=int, required=True)
    sub.add_argument("--with-succ", action="store_true")
    sub.set_defaults(run=census)

    sub = commands.add_parser("params", help="radius, threshold and g bounds")
    sub.add_argument("--alpha", type=int, required=True)
    sub.add_argument("--degree", type=int, required=True)
    sub.add_argument("--n-occ", type=int, default=1)
    sub.set_defaults(run=params)

    sub = commands.add_parser("weave", help="build and check a pair of successors")
    sub.add_argument("g1")
    sub.add_argument("g2")
    sub.add_argument("--out-succ1", required=True)
    sub.add_argument("--out-succ2", required=True)
    _weave_options(sub)
    sub.set_defaults(run=weave)

    sub = commands.add_parser("verify", help="re-check successor files")
    for name in ("g1", "succ1", "g2", "succ2"):
        sub.add_argument(name)
    _weave_options(sub)
    sub.set_defaults(run=verify)

    sub = commands.add_parser("ef", help="Ehrenfeucht-Fraisse equivalence")
    sub.add_argument("a")
    sub.add_argument("b")
    sub.add_argument("--depth", type=int, required=True)
    sub.set_defaults(run=ef)

    sub = commands.add_parser("mc", help="model check a sentence")
    sub.add_argument("file")
    sub.add_argument("formula")
    sub.set_defaults(run=mc)

    sub = commands.add_parser("rewrite", help="switch successor flavour")
    sub.add_argument("direction", choices=sorted(REWRITES))
    sub.add_argument("formula")
    sub.set_defaults(run=rewrite)
    return parser


def _configure(verbose: int):
    level = logging.WARNING
    if verbose:
        level = logging.DEBUG if verbose > 1 else logging.INFO
    logging.basicConfig(
        level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr
    )
    budget = os.environ.get(BUDGET_VARIABLE)
    if budget is not None:
        try:
            settings.fractal_element_budget = int(budget)
        except ValueError:
            raise InputError(f"{BUDGET_VARIABLE}={budget!r} is not an integer")


def run_command(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand and map its outcome to an exit code.

    0 success, 1 failed check or negative answer, 2 infeasible or not similar,
    3 input error.
    """
    try:
        args = build_parser().parse_args(argv)
        _configure(args.verbose)
        code = args.run(args)
        for name, (hits, misses) in sorted(cache.stats().items()):
            logger.debug("cache %s: %d hits, %d misses", name, hits, misses)
        return code
    except (InputError, OSError) as error:
        print(f"input error: {error}", file=sys.stderr)
        return 3
    except (SimilarityError, InfeasibilityError, ResourceError) as error:
        print(f"{type(error).__name__}: {error}", file=sys.stderr)
        return 2
    except ContractViolation as error:
        print(f"contract violation: {error}", file=sys.stderr)
        return 1


def main(argv: Optional[List[str]] = None):
    sys.exit(run_command(argv))
