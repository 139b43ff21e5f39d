"""
Command line entry point.

    polyzeta finite 3 "2,1"                    -> 5/12
    polyzeta stuffle 1 1                       -> 2*(1,1) + (2)
    polyzeta eval mzv "-2" --prec 128
    polyzeta eval li "2,1" --args "1/2,1"
    polyzeta eval ky "3,2" "2,2" --zero-head
    polyzeta poset eval diagram.json
    polyzeta verify BBB-4.1 --params m=0,n=0
    polyzeta verify suite bbb --json report.json

Exit status: 0 when everything asked for succeeded, 1 when a verification
failed, 2 on bad input (including values that cannot be evaluated).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import mpmath

from . import evaluator as ev
from .algebra import circled_star, star_expand, stuffle
from .finite import mhs_eval, mhss_eval, parametric_star_eval
from .identities import ParameterError, family_names, get_family, parse_params
from .index import ArgumentedIndex, as_fraction, format_fraction, parse_index
from .poset import PosetError, decompose, poset_from_json, poset_value
from .verify import (DEFAULT_PREC, DEFAULT_TOL, Config, UnknownSuite, check_instance, dump_report,
                     make_report, run_suite, suite_families, suite_names)
from .words import format_word

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rational_list(text: str) -> tuple:
    try:
        return tuple(as_fraction(t.strip()) for t in text.split(",") if t.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad rational list {text!r}") from None


def _index(text: str):
    try:
        return parse_index(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _show_value(v, prec: int) -> str:
    digits = max(10, int(prec * 0.30103))
    with mpmath.workprec(prec + 16):
        return f"{mpmath.nstr(v.value, digits)} +/- {mpmath.nstr(v.bound, 3)}"


def _formal_payload(fs) -> dict:
    return {"terms": [[format_fraction(fs[k]), str(k)] for k in fs], "text": str(fs)}


def _emit_json(args, payload: dict):
    if getattr(args, "json", None):
        with open(args.json, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")


def _value_payload(v, prec: int) -> dict:
    with mpmath.workprec(prec + 16):
        return {"value": mpmath.nstr(v.value, max(10, int(prec * 0.30103))),
                "bound": mpmath.nstr(v.bound, 6), "prec": prec}


# ---------------------------------------------------------------------------
# subcommands


def cmd_finite(args) -> int:
    k = _index(args.index)
    if args.n < 0:
        raise UsageError("n must be nonnegative")
    max_n = max(args.n, 200)
    if args.x is not None:
        val = parametric_star_eval(args.n, k, as_fraction(args.x), max_n)
    elif args.star:
        val = mhss_eval(args.n, k, max_n)
    else:
        val = mhs_eval(args.n, k, max_n)
    print(format_fraction(val))
    _emit_json(args, {"n": args.n, "index": args.index, "value": format_fraction(val)})
    return EXIT_OK


def cmd_stuffle(args) -> int:
    fs = stuffle(_index(args.k), _index(args.l))
    print(fs)
    _emit_json(args, _formal_payload(fs))
    return EXIT_OK


def cmd_starexpand(args) -> int:
    fs = star_expand(_index(args.k))
    print(fs)
    _emit_json(args, _formal_payload(fs))
    return EXIT_OK


def cmd_circledstar(args) -> int:
    k, l = _index(args.k), _index(args.l)
    if not k or not l:
        raise UsageError("circled product needs non-empty operands")
    fs = circled_star(k, l)
    print(fs)
    _emit_json(args, _formal_payload(fs))
    return EXIT_OK


def cmd_eval(args) -> int:
    prec = args.prec
    if args.kind == "mzv":
        if len(args.operands) != 1:
            raise UsageError("eval mzv takes one index")
        v = ev.eval_mzv(_index(args.operands[0]), prec)
    elif args.kind == "li":
        if len(args.operands) != 1 or args.args is None:
            raise UsageError("eval li takes one index and --args")
        k = _index(args.operands[0])
        if any(p < 0 for p in k.parts):
            raise UsageError("polylog exponents are positive; put signs into --args")
        v = ev.eval_li(ArgumentedIndex(k.parts, _rational_list(args.args)), prec)
    elif args.kind == "ky":
        if len(args.operands) != 2:
            raise UsageError("eval ky takes two indices")
        k, l = _index(args.operands[0]), _index(args.operands[1])
        x = as_fraction(args.x) if args.x is not None else Fraction(1)
        v = ev.eval_ky(k, l, args.zero_head, x, prec)
    else:
        raise UsageError(f"unknown eval kind {args.kind!r}")
    print(_show_value(v, prec))
    _emit_json(args, _value_payload(v, prec))
    return EXIT_OK


def _load_poset(path: str):
    try:
        with open(path) as fh:
            return poset_from_json(json.load(fh))
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed poset file {path}: {exc}") from None


def cmd_poset(args) -> int:
    X = _load_poset(args.file)
    if args.action == "expand":
        fs = decompose(X)
        terms = [[format_fraction(fs[w]), format_word(w)] for w in fs]
        for c, w in terms:
            print(f"{c} * I({w})")
        _emit_json(args, {"terms": terms})
    else:
        if not X.is_admissible():
            raise UsageError("poset is not admissible: a maximal node is labelled 1 or a minimal node 0")
        v = poset_value(X, args.prec)
        print(_show_value(v, args.prec))
        _emit_json(args, _value_payload(v, args.prec))
    return EXIT_OK


def _print_record(rec: dict, out=None):
    out = out or sys.stdout
    status = "PASS" if rec["pass"] else "FAIL"
    print(f"{status} {rec['instance']}  residual={rec['residual']}  bound={rec['bound']}", file=out)
    if not rec["pass"]:
        print(f"    lhs = {rec['lhs_value']}", file=out)
        print(f"    rhs = {rec['rhs_value']}", file=out)
        for note in rec["notes"]:
            print(f"    note: {note}", file=out)


def cmd_verify(args) -> int:
    config = Config(prec=args.prec, tol=args.tol, seed=args.seed, timings=args.timings)
    if args.target == "list":
        for name in family_names():
            print(f"{name:14s} {get_family(name).summary}")
        return EXIT_OK
    if args.target == "suite":
        if not args.name:
            raise UsageError("verify suite needs a suite name: " + ", ".join(suite_names()))
        try:
            suite_families(args.name)
        except UnknownSuite as exc:
            raise UsageError(exc.args[0]) from None
        report = run_suite(args.name, config, jobs=args.jobs)
    else:
        fam = get_family(args.target)
        params = parse_params(args.params or "", fam.params)
        inst = fam.make(**params)
        report = make_report([check_instance(inst, config.prec, config.tol)], config)
    for rec in report["records"]:
        if args.verbose or not rec["pass"] or report["count"] == 1:
            _print_record(rec)
    print(f"{report['passed']}/{report['count']} passed")
    if args.json:
        dump_report(report, args.json)
    return EXIT_OK if not report["failed"] else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser


def _positive_int(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def _decimal(text: str) -> str:
    try:
        Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a decimal number: {text!r}") from None
    return text


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prec", type=_positive_int, default=DEFAULT_PREC, help="working precision in bits")
    common.add_argument("--tol", type=_decimal, default=DEFAULT_TOL, help="residual tolerance")
    common.add_argument("--max-terms", type=_positive_int, default=None,
                        help="cap on the number of series terms per evaluation")
    common.add_argument("--json", metavar="PATH", help="write a JSON report here")
    common.add_argument("--seed", type=int, default=0, help="seed for randomised grids")

    p = argparse.ArgumentParser(prog="polyzeta", description="Multiple zeta values: algebra, evaluation, identities.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("finite", parents=[common], help="exact nested harmonic sum zeta_n(k)")
    s.add_argument("n", type=int)
    s.add_argument("index")
    s.add_argument("--star", action="store_true", help="star sum (non-strict inequalities)")
    s.add_argument("--x", help="parametric star sum with x^{n_r} on the innermost variable")
    s.set_defaults(func=cmd_finite)

    for name, fn, nargs in (("stuffle", cmd_stuffle, 2), ("starexpand", cmd_starexpand, 1),
                            ("circledstar", cmd_circledstar, 2)):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("k")
        if nargs == 2:
            s.add_argument("l")
        s.set_defaults(func=fn)

    s = sub.add_parser("eval", parents=[common], help="certified value of mzv, li or ky")
    s.add_argument("kind", choices=("mzv", "li", "ky"))
    s.add_argument("operands", nargs="+")
    s.add_argument("--args", help="polylog arguments, comma separated rationals")
    s.add_argument("--zero-head", action="store_true", help="ky: second index is (0, l)")
    s.add_argument("--x", help="ky: evaluate the series at x")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("poset", parents=[common], help="integral of a labelled poset")
    s.add_argument("action", choices=("eval", "expand"))
    s.add_argument("file")
    s.set_defaults(func=cmd_poset)

    s = sub.add_parser("verify", parents=[common], help="verify an identity family or a suite")
    s.add_argument("target", help="family id, 'suite' or 'list'")
    s.add_argument("name", nargs="?", help="suite name after 'suite'")
    s.add_argument("--params", help="e.g. m=1,2;p=0;a=-1/2")
    s.add_argument("--jobs", type=_positive_int, default=1, help="worker processes for suites")
    s.add_argument("--timings", action="store_true", help="add wall-clock seconds to each record")
    s.add_argument("-v", "--verbose", action="store_true", help="print every record")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.max_terms is not None:
        ev.MAX_TERMS = args.max_terms
    try:
        return args.func(args)
    except (UsageError, ParameterError, PosetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ev.EvaluationError as exc:
        # divergent input or an unreachable accuracy; inside verify these become failed records
        print(f"cannot evaluate: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
