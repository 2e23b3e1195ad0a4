"""Command-line front door: compute long-cycle coefficients, the subspace
polynomial family, principal specializations, brute-force counts, and run
the verification suite.

Exit codes: 0 success, 1 verification failure, 2 parse error, 3 guardrail.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from itertools import product

from .errors import (GuardrailExceeded, HeckefactError, ParseError,
                     RankGuardExceeded)


def _parse_fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational q value {text!r}") from exc


def _warn_root_of_unity(qval):
    if qval == -1:
        print("warning: q = -1 is a root of unity; the algebra is not "
              "semisimple there and the closed forms may degenerate",
              file=sys.stderr)
    if qval == 0:
        raise ParseError("q = 0 is not allowed")


def _print_scalar(value, fmt):
    from .qalgebra import LaurentPoly, RatFunc

    if isinstance(value, RatFunc):
        lp = value.as_laurent()
        value = lp if lp is not None else value
    if fmt == "json":
        if isinstance(value, LaurentPoly):
            print(json.dumps(value.to_json()))
        else:
            print(json.dumps({"text": value.text()}))
    else:
        print(value.text())


def cmd_coeff(args):
    from .symeval import coeff_Tc_hook_formula, parse_symfunc

    f = parse_symfunc(args.f)
    value = coeff_Tc_hook_formula(f, args.n)
    if args.q is not None:
        qval = _parse_fraction(args.q)
        _warn_root_of_unity(qval)
        result = value.eval_at(qval)
        print(result)
        return 0
    _print_scalar(value, args.format)
    return 0


def _parse_rvec(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ParseError(f"bad r vector {text!r}") from exc


def cmd_mq(args):
    from .mqpoly import mq_alt, mq_bolan, mq_stat, mq_subspaces

    r = _parse_rvec(args.r)
    algo = args.algo
    if algo == "alt":
        _print_scalar(mq_alt(args.n, r), args.format)
    elif algo == "bolan":
        _print_scalar(mq_bolan(args.n, r), args.format)
    elif algo == "stat":
        _print_scalar(mq_stat(args.n, r), args.format)
    elif algo.startswith("subspaces:"):
        try:
            qval = int(algo.split(":", 1)[1])
        except ValueError as exc:
            raise ParseError(f"bad field size in {algo!r}") from exc
        print(mq_subspaces(args.n, r, qval))
    else:
        raise ParseError(f"unknown algorithm {algo!r}")
    return 0


def cmd_mq_table(args):
    from .mqpoly import mq_alt

    rows = []
    for n in range(0, args.n_max + 1):
        for m in range(1, args.m_max + 1):
            for r in product(range(n + 1), repeat=m):
                p = mq_alt(n, r)
                if p.is_zero():
                    continue
                rows.append((n, ";".join(map(str, r)), p.text(), p.at_one()))
    rows.sort(key=lambda row: (row[0], row[1]))
    out = open(args.out, "w", newline="") if args.out != "-" else sys.stdout
    try:
        writer = csv.writer(out)
        writer.writerow(["n", "r", "polynomial", "value_at_1"])
        writer.writerows(rows)
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_ps(args):
    from .symeval import parse_symfunc, principal_specialization

    f = parse_symfunc(args.f)
    _print_scalar(principal_specialization(f, args.n), args.format)
    return 0


def cmd_oracle(args):
    from .oracle import count_a, count_b, count_c

    if args.kind == "a":
        print(count_a(args.n, int(args.params)))
    elif args.kind == "b":
        print(count_b(args.n, int(args.params)))
    elif args.kind == "c":
        print(count_c(args.n, _parse_rvec(args.params)))
    else:
        raise ParseError(f"unknown oracle kind {args.kind!r}")
    return 0


def cmd_verify(args):
    from .verifysuite import run_all

    reports = run_all(args.profile)
    for report in reports:
        print(report.to_json_line())
    return 0 if all(r.status == "pass" for r in reports) else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="heckefact",
        description="Exact factorization statistics of the long cycle in the "
                    "Iwahori-Hecke algebra")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeff", help="long-cycle coefficient of f at the "
                                     "q-Jucys-Murphy elements")
    p.add_argument("f", help="symmetric function, e.g. e[1,1], h[2], p[3], s[2,1]")
    p.add_argument("n", type=int)
    p.add_argument("--q", help="evaluate at a rational q instead of symbolically")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("mq", help="the subspace-coverage polynomial M^n_r(q)")
    p.add_argument("n", type=int)
    p.add_argument("r", help="comma-separated dimension vector, e.g. 2,2")
    p.add_argument("algo", nargs="?", default="alt",
                   help="alt | bolan | stat | subspaces:<qval>")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_mq)

    p = sub.add_parser("mq-table", help="export a CSV table of M^n_r(q)")
    p.add_argument("n_max", type=int)
    p.add_argument("m_max", type=int)
    p.add_argument("out", help="output path, or - for stdout")
    p.set_defaults(func=cmd_mq_table)

    p = sub.add_parser("ps", help="principal specialization f(1, q, ..., q^{n-1})")
    p.add_argument("f")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_ps)

    p = sub.add_parser("oracle", help="classical q=1 brute-force counts")
    p.add_argument("kind", help="a (transpositions) | b (monotone) | c (cycle counts)")
    p.add_argument("n", type=int)
    p.add_argument("params", help="j for kinds a/b, comma-separated p for kind c")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="run the named identity checks")
    p.add_argument("profile", nargs="?", default="quick")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GuardrailExceeded, RankGuardExceeded) as exc:
        print(f"guardrail: {exc}", file=sys.stderr)
        return 3
    except HeckefactError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
