"""Command-line front end.

Exit codes: 0 success, 1 certificate rejected, 2 invalid input,
3 prime search exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, TextIO

from .dedekind import EVALUATORS, S
from .errors import DedekindError, MalformedCertificate, SearchExhausted
from .modular import DEFAULT_MR_ROUNDS, DEFAULT_SEARCH_CAP
from .numeric import format_rational
from .realize import RealizationCertificate, realize, verify_certificate
from .survey import attained_frac_set, prime_bound_report

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_INVALID = 2
EXIT_EXHAUSTED = 3


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _integer(text: str) -> int:
    try:
        return int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}") from None


def _positive(text: str) -> int:
    value = _integer(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--evaluator", choices=EVALUATORS, default=None,
                        help="sum: default fast; survey: default is the (m + m*)/n shortcut")
    common.add_argument("--prime-search-start", type=_integer, default=2, metavar="P")
    common.add_argument("--mr-rounds", type=_positive, default=DEFAULT_MR_ROUNDS, metavar="K")
    common.add_argument("--search-cap", type=_positive, default=DEFAULT_SEARCH_CAP, metavar="N")

    parser = _ArgumentParser(
        prog="dedekind-frac",
        description="Exact Dedekind sums and realization of their fractional parts.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("sum", parents=[common], help="evaluate S(m, n) and s(m, n)")
    p.add_argument("m", type=_integer)
    p.add_argument("n", type=_integer)

    p = sub.add_parser("realize", parents=[common], help="find m, n' with frac(S(m, n')) = q/n")
    p.add_argument("q", type=_integer)
    p.add_argument("n", type=_integer)

    p = sub.add_parser("verify", parents=[common], help="check a certificate file ('-' for stdin)")
    p.add_argument("file")

    p = sub.add_parser("survey", parents=[common], help="list attained frac(S(m, n)) for fixed n")
    p.add_argument("n", type=_integer)
    p.add_argument("--prime-bound", action="store_true",
                   help="require n prime and compare the count with (n+1)/2")
    return parser


def _cmd_sum(args: argparse.Namespace, out: TextIO) -> int:
    if args.n < 1:
        raise DedekindError(f"n must be >= 1, got {args.n}")
    m = args.m % args.n
    big = S(m, args.n, args.evaluator or "fast")
    small = big / 12
    if args.json:
        out.write(json.dumps({
            "m": str(m), "n": str(args.n),
            "S": format_rational(big), "s": format_rational(small),
        }) + "\n")
    else:
        out.write(f"S = {format_rational(big)}\ns = {format_rational(small)}\n")
    return EXIT_OK


def _cmd_realize(args: argparse.Namespace, out: TextIO) -> int:
    cert = realize(args.q, args.n, start=args.prime_search_start,
                   cap=args.search_cap, rounds=args.mr_rounds)
    if not verify_certificate(cert):
        raise AssertionError(f"constructed certificate failed verification: {cert}")
    if args.json:
        out.write(cert.to_json() + "\n")
    else:
        for key, value in cert.to_dict().items():
            out.write(f"{key} = {str(value).lower() if isinstance(value, bool) else value}\n")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    try:
        if args.file == "-":
            text = sys.stdin.read()
        else:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise MalformedCertificate(f"cannot read {args.file}: {exc.strerror}") from None
    ok = verify_certificate(RealizationCertificate.from_json(text))
    if args.json:
        out.write(json.dumps({"verified": ok}) + "\n")
    else:
        out.write("verified\n" if ok else "REJECTED\n")
    return EXIT_OK if ok else EXIT_REJECTED


def _cmd_survey(args: argparse.Namespace, out: TextIO) -> int:
    via = args.evaluator or "eq1"
    if args.prime_bound:
        report = prime_bound_report(args.n, via, rounds=args.mr_rounds)
    else:
        report = attained_frac_set(args.n, via)
    out.write(report.to_json() + "\n" if args.json else report.to_csv())
    return EXIT_OK


_COMMANDS = {
    "sum": _cmd_sum,
    "realize": _cmd_realize,
    "verify": _cmd_verify,
    "survey": _cmd_survey,
}


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout if out is None else out
    try:
        return _COMMANDS[args.command](args, out)
    except SearchExhausted as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except (DedekindError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
