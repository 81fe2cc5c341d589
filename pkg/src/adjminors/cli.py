"""Command-line front door: classify, export, realize, certify, census."""

from __future__ import annotations

import argparse
import csv
import sys

from .binomials import DEFAULT_BUDGET, BudgetExceeded
from .census import CSV_HEADER, census_records
from .gamma import build_gamma, classify, gamma_dot
from .grid import InputError, MinorSet, minor_set_from_json
from .realizer import NotRealizable, realization_dot, realization_json, realize
from .toric import certify_realization

EXIT_OK = 0
EXIT_NOT_REALIZABLE = 1
EXIT_NOT_PRIME = 2
EXIT_INPUT = 64
EXIT_BUDGET = 70


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load(path: str) -> MinorSet:
    return minor_set_from_json(_read_text(path))


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_check(args) -> int:
    s = _load(args.input)
    cls = classify(s)
    print(f"chessboard: {_yesno(cls.chessboard)}")
    print(f"prime: {_yesno(cls.prime)}")
    print(f"realizable: {_yesno(cls.realizable)}")
    reason = cls.violated_condition()
    if reason is not None:
        print(f"reason: {reason}")
    if cls.realizable:
        return EXIT_OK
    return EXIT_NOT_REALIZABLE if cls.prime else EXIT_NOT_PRIME


def cmd_gamma(args) -> int:
    s = _load(args.input)
    _write_text(args.dot, gamma_dot(build_gamma(s)))
    return EXIT_OK


def cmd_realize(args) -> int:
    s = _load(args.input)
    r = realize(s)
    wrote = False
    if args.json is not None:
        _write_text(args.json, realization_json(r) + "\n")
        wrote = True
    if args.dot is not None:
        _write_text(args.dot, realization_dot(r))
        wrote = True
    if not wrote:
        _write_text("-", realization_json(r) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    s = _load(args.input)
    r = realize(s)
    cert = certify_realization(s, r, budget=args.budget)
    print(f"minor-basis size: {cert.minor_basis_size}")
    print(f"toric-basis size: {cert.toric_basis_size}")
    print(f"verdict: {'PASS' if cert.equal else 'FAIL'}")
    return EXIT_OK if cert.equal else EXIT_NOT_REALIZABLE


def cmd_census(args) -> int:
    out = sys.stdout if args.output == "-" else open(args.output, "w", encoding="utf-8", newline="")
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for record in census_records(
            args.max_a,
            args.max_b,
            args.max_minors,
            verify_up_to=args.verify_up_to,
            cycles_only=args.cycles_only,
            chessboard_only=args.chessboard_only,
            budget=args.budget,
        ):
            writer.writerow(record.csv_row())
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adjminors",
        description=(
            "Classify ideals of adjacent 2-minors (prime / realizable as a graph "
            "toric ideal), construct witness graphs and certify them exactly."
        ),
    )
    parser.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET,
        help="step budget for Groebner computations (default %(default)s)",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help="reserved; enumeration is exhaustive, not random",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("check", help="classify a minor set (exit 0/1/2)")
    p.add_argument("input", help="JSON minor-set file, or - for stdin")
    p.set_defaults(func=cmd_check)

    p = subs.add_parser("gamma", help="export the companion graph as DOT")
    p.add_argument("input", help="JSON minor-set file, or - for stdin")
    p.add_argument("--dot", default="-", metavar="PATH", help="output path (default stdout)")
    p.set_defaults(func=cmd_gamma)

    p = subs.add_parser("realize", help="construct the witness graph")
    p.add_argument("input", help="JSON minor-set file, or - for stdin")
    p.add_argument("--json", nargs="?", const="-", default=None, metavar="PATH")
    p.add_argument("--dot", nargs="?", const="-", default=None, metavar="PATH")
    p.set_defaults(func=cmd_realize)

    p = subs.add_parser("verify", help="realize and certify ideal equality")
    p.add_argument("input", help="JSON minor-set file, or - for stdin")
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("census", help="enumerate configurations as CSV")
    p.add_argument("--max-a", type=int, required=True, help="largest cell row index")
    p.add_argument("--max-b", type=int, required=True, help="largest cell column index")
    p.add_argument("--max-minors", type=int, required=True, help="largest set size")
    p.add_argument("--verify-up-to", type=int, default=0, metavar="V",
                   help="Groebner-verify realizable sets with at most V minors")
    p.add_argument("--cycles-only", action="store_true",
                   help="restrict to sets whose companion graph is a cycle")
    p.add_argument("--chessboard-only", action="store_true",
                   help="restrict to chessboard-type sets")
    p.add_argument("--output", default="-", metavar="PATH", help="CSV path (default stdout)")
    p.set_defaults(func=cmd_census)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except NotRealizable as e:
        print(f"not realizable: {e.reason}", file=sys.stderr)
        return EXIT_NOT_REALIZABLE
    except BudgetExceeded as e:
        print(f"resource error: {e}", file=sys.stderr)
        return EXIT_BUDGET


def run() -> None:
    sys.exit(main())
