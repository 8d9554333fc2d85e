"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 N above the symbolic bound (``WORKBENCH_MAX_N``, default 4).
"""
import argparse
import json
import sys

from .calogero import CMPoint, cm_psi
from .cherednik import NBoundError, central_coeffs, max_n
from .quasiexp import QExpSpace, qexp_psi
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _dump(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _write(text, path):
    if path in (None, "-"):
        sys.stdout.write(text + "\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def cmd_central(args):
    if args.n < 1:
        print("N must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        table = central_coeffs(args.n)
    except NBoundError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_BOUND
    doc = {
        "N": args.n,
        "convention": "c[i][j] is the coefficient of v^(N-i) u^(N-j)",
        "c": [[h.to_json() for h in row] for row in table],
    }
    _write(_dump(doc), args.out)
    return EXIT_OK


def cmd_verify(args):
    if args.n < 1 or (args.trials is not None and args.trials < 1):
        print("N and trials must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = run_suite(args.suite, args.n, args.seed, args.trials, fault=args.inject_fault)
    except NBoundError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_BOUND
    print(_dump(report))
    return EXIT_OK if report["passed"] else EXIT_FAIL


def _load_json(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def cmd_psi(args):
    if args.order < 1:
        print("order must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.point:
            point = CMPoint.from_json(_load_json(args.point))
            if point.n > max_n():
                print(f"N={point.n} exceeds the bound {max_n()}", file=sys.stderr)
                return EXIT_BOUND
            series = cm_psi(point, args.order)
        else:
            space = QExpSpace.from_json(_load_json(args.qexp))
            series = qexp_psi(space, args.order)
    except (OSError, ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        print(f"malformed input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _write(_dump(series.to_json()), args.out)
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="bethe-cherednik", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("central", help="coefficients c_ij of the universal central polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_central)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("psi", help="Psi-function of a CM point or a quasi-exponential space")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--point")
    src.add_argument("--qexp")
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_psi)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
