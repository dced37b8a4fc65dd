"""``pbent`` command line.

Exit codes: 0 success, 1 mismatch or failed check, 2 input error,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from ..constructions.from_json import build, load_spec
from ..errors import InputError, InvariantViolation, PBentError
from ..galois import divisors, parse_field_spec
from ..linpoly import (
    LinearizedPoly,
    inverse_binomial,
    inverse_linearized,
    is_permutation_general,
    parse_linearized,
)
from ..pfun import algebraic_degree, classify, walsh_fast, walsh_naive
from ..survey import FAMILIES as SURVEY_FAMILIES
from ..survey import run_survey
from ..verify import SUITES, run_suite

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_INVARIANT = 0, 1, 2, 3


def _emit(obj):
    print(json.dumps(obj, indent=2))


def cmd_field_info(args):
    F = parse_field_spec(args.field)
    subs = [f"F_{F.p ** d}" for d in divisors(F.n) if d < F.n]
    report = {
        "schema": 1,
        "p": F.p,
        "n": F.n,
        "order": F.order,
        "modulus": list(F.modulus),
        "irreducible": True,
        "primitive": bool(F.primitive),
        "subfields": subs,
    }
    if args.json:
        _emit(report)
    else:
        print(f"p: {F.p}")
        print(f"n: {F.n}")
        print(f"order: {F.order}")
        print(f"modulus: {list(F.modulus)}")
        print("irreducible: true")
        print(f"primitive: {'true' if F.primitive else 'false'}")
        print(f"subfields: {', '.join(subs) if subs else 'none'}")
    return EXIT_OK


def cmd_analyze(args):
    con = build(load_spec(args.spec))
    f = con.function
    spectrum = walsh_naive(f) if args.naive else walsh_fast(f)
    c = classify(spectrum, dual=True)
    report = {"schema": 1, "family": con.family, "field": con.field.spec()}
    report.update(c.report(include_dual=args.dual))
    report.update(con.info)
    if args.degree:
        if f.kind != "single":
            raise InputError("--degree needs a single-field construction")
        report["degree"] = algebraic_degree(f)
    if args.dump_spectrum:
        spectrum.write_tsv(args.dump_spectrum)
    _emit(report)
    return EXIT_OK


def cmd_degree(args):
    con = build(load_spec(args.spec))
    if con.function.kind != "single":
        raise InputError("degree needs a single-field construction")
    print(algebraic_degree(con.function))
    return EXIT_OK


def _binomial_twist(L: LinearizedPoly):
    """r if L = x^(p^r) + a x with r >= 1 and a != 0, else None."""
    nz = [i for i, c in enumerate(L.coeffs) if c]
    if len(nz) == 2 and nz[0] == 0 and L.coeffs[nz[1]] == 1:
        return nz[1]
    return None


def cmd_invert_linearized(args):
    F = parse_field_spec(args.field)
    L = parse_linearized(F, args.poly)
    if not is_permutation_general(L):
        print(f"not a permutation: {L}", file=sys.stderr)
        return EXIT_INPUT
    r = _binomial_twist(L)
    if r is not None:
        inv = inverse_binomial(F.element(L.coeffs[0]), r)
        method = "binomial"
        if inv.coeffs != inverse_linearized(L).coeffs:
            raise InvariantViolation("binomial inverse disagrees with the linear solve")
    else:
        inv = inverse_linearized(L)
        method = "linear-solve"
    ident = LinearizedPoly.identity(F).coeffs
    if L.compose(inv).coeffs != ident or inv.compose(L).coeffs != ident:
        raise InvariantViolation("computed inverse does not compose to the identity")
    if args.json:
        _emit({"schema": 1, "poly": str(L), "inverse": str(inv), "method": method,
               "coeffs": list(inv.coeffs)})
    else:
        print(f"inverse: {inv}")
        print(f"method: {method}")
    return EXIT_OK


def cmd_survey(args):
    F = parse_field_spec(args.field)
    sample = None if args.exhaustive else args.sample
    if sample is None and not args.exhaustive:
        raise InputError("choose --exhaustive or --sample N")
    result = run_survey(args.family, F, sample=sample, seed=args.seed, workers=args.workers)
    if args.out:
        result.write_tsv(args.out)
    for line in result.summary_lines():
        print(line)
    return EXIT_OK if result.ok else EXIT_MISMATCH


def cmd_verify_fixtures(args):
    results = run_suite(args.suite)
    for r in results:
        print(r.line())
    hard = [r for r in results if r.hard]
    failed = sum(not r.passed for r in hard)
    print(f"hard checks: {len(hard) - failed}/{len(hard)} passed")
    return EXIT_OK if failed == 0 else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pbent", description="p-ary bent function toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field-info", help="validate a field spec and list its subfields")
    p.add_argument("field", help="p=<prime>,n=<deg>,mod=[c0,...,cn]")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_field_info)

    p = sub.add_parser("analyze", help="classify one constructed function")
    p.add_argument("spec", help="construction JSON, inline or a file path")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--fast", action="store_true", help="butterfly transform (default)")
    g.add_argument("--naive", action="store_true", help="direct O(q^2) transform")
    p.add_argument("--dump-spectrum", metavar="PATH")
    p.add_argument("--dual", action="store_true", help="include the dual table of a bent function")
    p.add_argument("--degree", action="store_true", help="include the algebraic degree")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("survey", help="predicted versus observed over a parameter space")
    p.add_argument("family", choices=SURVEY_FAMILIES)
    p.add_argument("field")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--exhaustive", action="store_true")
    g.add_argument("--sample", type=int, metavar="N")
    p.add_argument("--seed", type=int, default=0, help="Philox seed for --sample")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", metavar="PATH", help="write the per-tuple TSV here")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("verify-paper", help="run the golden-fixture checks")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.set_defaults(func=cmd_verify_fixtures)

    p = sub.add_parser("degree", help="algebraic degree of a constructed function")
    p.add_argument("spec")
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("invert-linearized", help="compositional inverse of a linearized permutation")
    p.add_argument("field")
    p.add_argument("poly", help="e.g. '1*x^p2 + g^1*x'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invert_linearized)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (InputError, PBentError, ZeroDivisionError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
