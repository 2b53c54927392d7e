"""Command-line interface.

Exit codes: 0 success, 1 a verdict came back false, 2 bad input,
3 an internal invariant failed (a bug, not a verdict).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .catalog import build_structure, matrix_to_json
from .dga import DgaPresentation, NotIntegrableError
from .double import CourantDouble, PreconditionError
from .exterior import format_exterior
from .lie import LieAlgebra, NotALieAlgebraError
from .linalg import Subspace
from .notation import ExpressionError, SalamonSyntaxError, parse_algebra_file
from .semiabelian import (
    IMPOSSIBLE,
    SEMI_ABELIAN,
    InternalInvariantError,
    check_semi_abelian,
    search_semi_abelian,
    semi_abelian_report,
    symplectic_semi_abelian,
)

VERDICT_FALSE = 1
INPUT_ERROR = 2
INTERNAL_ERROR = 3


class CliInputError(ValueError):
    pass


def _load_algebra(spec: str) -> LieAlgebra:
    """A structure tuple, or a path to an algebra file (first entry)."""
    if os.path.exists(spec):
        with open(spec) as handle:
            entries = parse_algebra_file(handle.read())
        if not entries:
            raise CliInputError("algebra file %r has no entries" % spec)
        name, text = entries[0]
        return LieAlgebra.from_tuple(text, name=name or "")
    return LieAlgebra.from_tuple(spec)


def _load_gcs_doc(path: str) -> dict:
    with open(path) as handle:
        return json.load(handle)


def _build(args):
    if args.gcs is None:
        raise CliInputError("this command needs --gcs <json file>")
    doc = _load_gcs_doc(args.gcs)
    if args.algebra is not None:
        algebra = _load_algebra(args.algebra)
    elif "algebra" in doc:
        algebra = LieAlgebra.from_tuple(doc["algebra"])
    else:
        raise CliInputError("no algebra given (use --algebra or an 'algebra' key)")
    return algebra, build_structure(algebra, doc)


def _emit(args, payload: dict, text_lines) -> None:
    if args.json:
        json.dump(payload, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        for line in text_lines:
            print(line)


def cmd_parse(args) -> int:
    algebra = _load_algebra(args.algebra)
    brackets = {}
    for i in range(algebra.dim):
        for j in range(i + 1, algebra.dim):
            value = algebra.bracket_basis(i, j)
            if any(not c.is_zero() for c in value):
                names = " ".join(
                    "%s*e%d" % (c, k + 1) for k, c in enumerate(value) if not c.is_zero()
                )
                brackets["[e%d,e%d]" % (i + 1, j + 1)] = names
    payload = {
        "tuple": algebra.to_tuple(),
        "dim": algebra.dim,
        "brackets": brackets,
    }
    _emit(args, payload, ["dim %d" % algebra.dim, "tuple: %s" % payload["tuple"]]
          + ["%s = %s" % kv for kv in sorted(brackets.items())])
    return 0


def cmd_check_jacobi(args) -> int:
    try:
        algebra = _load_algebra(args.algebra)
    except NotALieAlgebraError as err:
        _emit(args, {"jacobi": False, "violations": [str(v[:3]) for v in err.violations]},
              ["NOT_A_LIE_ALGEBRA: %s" % err])
        return VERDICT_FALSE
    _emit(args, {"jacobi": True}, ["OK"])
    return 0


def cmd_ce_cohomology(args) -> int:
    algebra = _load_algebra(args.algebra)
    degrees = [args.degree] if args.degree is not None else list(range(algebra.dim + 1))
    reports = [algebra.ce_cohomology(k).as_json(k) for k in degrees]
    _emit(args, {"cohomology": reports},
          ["H^%d: dim %d part %s" % (r["degree"], r["dim"], ", ".join(r["representatives"]) or "-")
           for r in reports])
    return 0


def cmd_gcs_validate(args) -> int:
    algebra, built = _build(args)
    gcs = built.gcs
    payload = {
        "valid_almost_structure": True,
        "type": gcs.gcs_type(),
        "eigenspace": [gcs.double.format(v) for v in gcs.eigenspace().basis_vectors()],
    }
    _emit(args, payload, ["valid almost structure, type %d" % payload["type"]]
          + ["  " + t for t in payload["eigenspace"]])
    return 0


def cmd_gcs_integrable(args) -> int:
    algebra, built = _build(args)
    result = built.gcs.is_integrable()
    payload = {"integrable": result.ok}
    if not result.ok:
        payload["failing_pair"] = list(result.failing_pair)
        payload["offending"] = built.gcs.double.format(result.offending)
    _emit(args, payload, ["integrable" if result.ok else
                          "NOT integrable on basis pair %s" % (result.failing_pair,)])
    return 0 if result.ok else VERDICT_FALSE


def cmd_gcs_type(args) -> int:
    algebra, built = _build(args)
    t = built.gcs.gcs_type()
    _emit(args, {"type": t}, ["type %d" % t])
    return 0


def cmd_dga_cohomology(args) -> int:
    algebra, built = _build(args)
    presentation = DgaPresentation(built.gcs)
    degrees = [args.degree] if args.degree is not None else list(range(presentation.n + 1))
    reports = []
    for k in degrees:
        result = presentation.cohomology(k)
        reports.append({
            "degree": k,
            "dim": result.dim,
            "representatives": [presentation.format(r) for r in result.representatives],
        })
    _emit(args, {"cohomology": reports},
          ["H^%d: dim %d part %s" % (r["degree"], r["dim"], ", ".join(r["representatives"]) or "-")
           for r in reports])
    return 0


def _parse_gamma(args, presentation: DgaPresentation):
    if args.gamma is None:
        raise CliInputError("this command needs --gamma <multivector expression>")
    return presentation.element(args.gamma)


def cmd_mc_check(args) -> int:
    algebra, built = _build(args)
    presentation = DgaPresentation(built.gcs)
    gamma = _parse_gamma(args, presentation)
    ok = presentation.maurer_cartan_check(gamma)
    defect = presentation.mc_defect(gamma)
    _emit(args, {"maurer_cartan": ok, "defect": presentation.format(defect)},
          ["Maurer-Cartan holds" if ok else "defect: %s" % presentation.format(defect)])
    return 0 if ok else VERDICT_FALSE


def cmd_deform(args) -> int:
    algebra, built = _build(args)
    presentation = DgaPresentation(built.gcs)
    gamma = _parse_gamma(args, presentation)
    deformed = presentation.deformed(gamma)
    squares = deformed.squares_to_zero()
    payload = {
        "squares_to_zero": squares,
        "maurer_cartan": presentation.maurer_cartan_check(gamma),
        "unchanged": deformed.same_presentation(presentation),
        "delta_1": matrix_to_json(deformed.delta_matrix(1)),
    }
    _emit(args, payload, [
        "deformed differential %s" % ("squares to zero" if squares else "does NOT square to zero"),
        "presentation %s" % ("unchanged" if payload["unchanged"] else "changed"),
    ])
    return 0 if squares else VERDICT_FALSE


def _load_pair(args, double: CourantDouble):
    with open(args.pair) as handle:
        doc = json.load(handle)
    a_space = double.subspace(doc["A"])
    k_space = double.subspace(doc["K"])
    return a_space, k_space


def _load_pool(args, double: CourantDouble):
    if args.pool is None:
        return None
    with open(args.pool) as handle:
        lines = [line.strip() for line in handle if line.strip() and not line.startswith("#")]
    return [double.parse(line) for line in lines]


def cmd_semi_abelian(args) -> int:
    algebra, built = _build(args)
    gcs = built.gcs
    double = gcs.double
    if args.pair is not None:
        a_space, k_space = _load_pair(args, double)
        check = check_semi_abelian(gcs, a_space, k_space)
        payload = {"status": SEMI_ABELIAN if check.ok else "NOT_SEMI_ABELIAN",
                   "failures": list(check.failures)}
        if check.ok:
            semi_abelian_report(gcs, a_space, k_space)
            payload["ell_decomposition"] = {
                "a": [double.format(v) for v in check.a_eigen.basis.entries],
                "k": [double.format(v) for v in check.k_eigen.basis.entries],
            }
        _emit(args, payload, [payload["status"]] + list(check.failures))
        return 0 if check.ok else VERDICT_FALSE
    verdict = search_semi_abelian(gcs, pool=_load_pool(args, double))
    payload = verdict.to_json()
    lines = [verdict.status]
    if verdict.status == SEMI_ABELIAN:
        lines += ["A: " + ", ".join(payload["pair"]["A"]),
                  "K: " + ", ".join(payload["pair"]["K"])]
    elif verdict.reason:
        lines.append(verdict.reason)
    _emit(args, payload, lines)
    return 0 if verdict.status == SEMI_ABELIAN else VERDICT_FALSE


def cmd_symplectic_semi_abelian(args) -> int:
    algebra, built = _build(args)
    if built.symplectic is None:
        raise CliInputError("the GCS document must have a 'symplectic' key")
    verdict = symplectic_semi_abelian(algebra, built.symplectic)
    payload = verdict.to_json()
    _emit(args, payload, [verdict.status])
    return 0 if verdict.status == SEMI_ABELIAN else VERDICT_FALSE


def cmd_verify(args) -> int:
    from .verify import run_acceptance

    if args.json:
        from .verify import acceptance_checks

        results = []
        ok = True
        for name, fn in acceptance_checks():
            result = fn()
            ok = ok and result.ok
            results.append({"name": result.name, "ok": result.ok,
                            "details": result.details})
        json.dump({"ok": ok, "checks": results}, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
        return 0 if ok else VERDICT_FALSE
    return 0 if run_acceptance() else VERDICT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilgca",
        description="Exact engine for invariant generalized complex structures "
                    "on nilpotent Lie algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, needs_algebra=False, needs_gcs=False, degree=False,
            gamma=False, pair_pool=False):
        p = sub.add_parser(name)
        if needs_algebra:
            p.add_argument("--algebra", required=name in ("parse", "check-jacobi", "ce-cohomology"),
                           help="structure tuple or algebra file")
        if needs_gcs:
            p.add_argument("--gcs", help="GCS JSON document")
            if not needs_algebra:
                p.add_argument("--algebra", help="structure tuple or algebra file")
        if degree:
            p.add_argument("--degree", type=int, default=None)
        if gamma:
            p.add_argument("--gamma", help="degree-2 multivector, e.g. \"L1^L2\"")
        if pair_pool:
            p.add_argument("--pair", help="JSON file with A/K element lists")
            p.add_argument("--search", action="store_true",
                           help="search for a pair (default when --pair absent)")
            p.add_argument("--pool", help="file of candidate elements, one per line")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(fn=fn)
        return p

    add("parse", cmd_parse, needs_algebra=True)
    add("check-jacobi", cmd_check_jacobi, needs_algebra=True)
    add("ce-cohomology", cmd_ce_cohomology, needs_algebra=True, degree=True)
    add("gcs-validate", cmd_gcs_validate, needs_gcs=True)
    add("gcs-integrable", cmd_gcs_integrable, needs_gcs=True)
    add("gcs-type", cmd_gcs_type, needs_gcs=True)
    add("dga-cohomology", cmd_dga_cohomology, needs_gcs=True, degree=True)
    add("mc-check", cmd_mc_check, needs_gcs=True, gamma=True)
    add("deform", cmd_deform, needs_gcs=True, gamma=True)
    add("semi-abelian", cmd_semi_abelian, needs_gcs=True, pair_pool=True)
    add("symplectic-semi-abelian", cmd_symplectic_semi_abelian, needs_gcs=True)
    add("verify-paper", cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (CliInputError, SalamonSyntaxError, ExpressionError, NotALieAlgebraError,
            PreconditionError, NotIntegrableError, json.JSONDecodeError,
            FileNotFoundError, KeyError, ValueError) as err:
        print("input error: %s" % err, file=sys.stderr)
        return INPUT_ERROR
    except InternalInvariantError as err:
        print("internal invariant violation: %s" % err, file=sys.stderr)
        return INTERNAL_ERROR


if __name__ == "__main__":
    sys.exit(main())
