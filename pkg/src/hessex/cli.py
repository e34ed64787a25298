"""``hessex`` command line: verification jobs, Groebner bases, multidegrees.

Exit codes: 0 pass, 1 verification failed, 2 S-pair budget exceeded,
3 input error.
"""

import argparse
import json
import sys
from fractions import Fraction

from .groebner import BudgetExceeded, pair_budget
from .hessenberg import HessenbergFunction, JordanData
from .idealops import Ideal, krull_dimension, multidegree
from .polycore import ParseError, order_from_name
from .verify import (
    DEFAULT_SAMPLES,
    EXIT_BUDGET,
    EXIT_FAIL,
    EXIT_INPUT,
    EXIT_PASS,
    JOBS,
    run_job,
    run_suite,
)


class InputError(Exception):
    pass


def _samples(text):
    try:
        return [Fraction(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _hess(text):
    try:
        return HessenbergFunction.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser():
    p = argparse.ArgumentParser(prog="hessex", description="Hessenberg scheme computations and checks.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run one verification job")
    v.add_argument("job", help="one of: %s" % ", ".join(sorted(JOBS)))
    v.add_argument("--n", type=int)
    v.add_argument("--h", type=_hess, help="Hessenberg function, e.g. 2,4,4,4")
    v.add_argument("--i", type=int)
    v.add_argument("--j", type=int)
    v.add_argument("--samples", type=_samples)
    v.add_argument("--jordan", help="JSON list of {eigenvalue, mu} blocks (explore-conjecture)")
    _common(v)

    s = sub.add_parser("suite", help="run every job for n = 4 (or the n = 5 smoke set)")
    s.add_argument("--n", type=int, default=4)
    s.add_argument("--workers", type=int, default=1)
    _common(s)

    for name, helptext in (("gb", "reduced Groebner basis of an ideal file"),
                           ("multidegree", "column-graded multidegree of an ideal file")):
        g = sub.add_parser(name, help=helptext)
        g.add_argument("--ideal", required=True, help="JSON file with 'ring' and 'generators'")
        _common(g)
    return p


def _common(p):
    p.add_argument("--order", default="paper", help="paper, lex, grevlex or deglex")
    p.add_argument("--budget", type=int, help="S-pair limit per Groebner computation")
    p.add_argument("--json", dest="json_out", help="write the JSON result to this file")


def _emit(data, path):
    text = json.dumps(data, indent=2)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    print(text)


def _load_ideal(path):
    try:
        with open(path) as fh:
            return Ideal.from_json(json.load(fh))
    except (OSError, json.JSONDecodeError, KeyError, ParseError, ValueError) as exc:
        raise InputError("cannot read ideal from %s: %s" % (path, exc))


def _cmd_verify(args, order):
    params = {"n": args.n, "h": args.h, "order": order}
    if args.i is not None or args.j is not None:
        params.update(i=args.i, j=args.j)
    if args.samples is not None:
        if not args.samples:
            raise InputError("--samples must be nonempty")
        params["samples"] = args.samples
    if args.jordan:
        params["jordan"] = JordanData.from_json(args.jordan)
    report = run_job(args.job, budget=args.budget, **params)
    _emit(report.to_json(), args.json_out)
    return report.exit_code()


def _cmd_suite(args, order):
    if args.n not in (3, 4, 5):
        raise InputError("suite covers n = 3, 4, 5")
    reports = run_suite(args.n, budget=args.budget, order=order, workers=args.workers)
    _emit([r.to_json() for r in reports], args.json_out)
    codes = [r.exit_code() for r in reports]
    for code in (EXIT_BUDGET, EXIT_FAIL):
        if code in codes:
            return code
    return EXIT_PASS


def _cmd_gb(args, order):
    ideal = _load_ideal(args.ideal)
    if args.budget is not None:
        with pair_budget(args.budget):
            data = ideal.to_json(order)
    else:
        data = ideal.to_json(order)
    _emit(data, args.json_out)
    return EXIT_PASS


def _cmd_multidegree(args, order):
    ideal = _load_ideal(args.ideal)
    with pair_budget(args.budget) if args.budget is not None else _nullcontext():
        md = multidegree(ideal, order)
        dim = krull_dimension(ideal, order)
    _emit({"multidegree": str(md), "dimension": dim, "codimension": ideal.ring.nvars - dim}, args.json_out)
    return EXIT_PASS


def _nullcontext():
    from contextlib import nullcontext

    return nullcontext()


COMMANDS = {"verify": _cmd_verify, "suite": _cmd_suite, "gb": _cmd_gb, "multidegree": _cmd_multidegree}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on bad usage; that code means "budget" here
        return EXIT_INPUT if exc.code else EXIT_PASS
    try:
        order = order_from_name(args.order)
        return COMMANDS[args.command](args, order)
    except BudgetExceeded as exc:
        print("budget exceeded: %s" % exc, file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, ValueError, KeyError, ParseError) as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
