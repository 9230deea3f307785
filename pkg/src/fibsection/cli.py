"""Command-line interface.

Exit status: 0 on success, 1 when a ``verify`` suite reports a failure,
2 on a usage error. Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import TextIO

from . import __version__
from .chebyshev import monic_signed_u, signed_u_explicit
from .dsection import ROUTES, Kind, SectionParams, section_gf, section_terms
from .seqcore import fib, lucas
from .verify import SUITES, run_suite

PROG = "fibsection"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _sign(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid sign {text!r}") from None
    if value not in (-1, 1):
        raise argparse.ArgumentTypeError(f"sign must be +1 or -1, got {text!r}")
    return value


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    common.add_argument("--quiet", action="store_true", help="suppress stderr notes")

    parser = _Parser(prog=PROG, description="Fibonacci and Lucas numbers along residue classes.")
    parser.add_argument("--version", action="version", version=f"{PROG} {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name in ("fib", "lucas"):
        p = sub.add_parser(name, parents=[common], help=f"{name} numbers, any integer index")
        p.add_argument("n", nargs="?", type=int)
        p.add_argument("--range", nargs=2, type=int, metavar=("A", "B"), help="indices A..B inclusive")

    p = sub.add_parser("section", parents=[common], help="terms X_{dn+h}")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--lucas", action="store_true")
    p.add_argument("--terms", type=_nonneg, default=10)
    p.add_argument("--gf", action="store_true", help="print numerator and denominator instead")

    p = sub.add_parser("conv", parents=[common], help="s-fold convolution coefficients")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--s", type=_nonneg, required=True)
    p.add_argument("--terms", type=_nonneg, default=10)
    p.add_argument("--lucas", action="store_true")
    p.add_argument("--route", choices=tuple(ROUTES), default="closed")

    p = sub.add_parser("cheb", parents=[common], help="Chebyshev-type coefficient lists")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--s", type=_nonneg, default=0)
    p.add_argument("--eps", type=_sign, default=-1)
    p.add_argument("--monic", action="store_true")

    p = sub.add_parser("verify", parents=[common], help="run an identity sweep")
    p.add_argument("--suite", choices=tuple(SUITES), required=True)
    p.add_argument("--max-d", type=int)
    p.add_argument("--max-s", type=_nonneg)
    p.add_argument("--max-n", type=_nonneg)
    p.add_argument("--terms", type=_nonneg)
    return parser


def _params(args: argparse.Namespace) -> dict:
    skip = {"format", "quiet"}
    return {k: v for k, v in vars(args).items() if k not in skip}


def _json(params: dict, route: str, **body) -> str:
    record = {"params": params, **body, "meta": {"route": route, "version": __version__}}
    return json.dumps(record, indent=2) + "\n"


def _csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _emit_terms(args, values: list[int], route: str, start: int = 0) -> str:
    if args.format == "json":
        return _json(_params(args), route, terms=[str(v) for v in values])
    if args.format == "csv":
        return _csv(["n", "value"], ((start + i, v) for i, v in enumerate(values)))
    return " ".join(map(str, values)) + "\n"


def _cmd_sequence(args) -> tuple[str, int]:
    func = fib if args.command == "fib" else lucas
    if args.range is not None:
        a, b = args.range
        if b < a:
            raise UsageError(f"empty range {a}..{b}")
        indices = range(a, b + 1)
    elif args.n is not None:
        indices = range(args.n, args.n + 1)
    else:
        raise UsageError("give an index N or --range A B")
    return _emit_terms(args, [func(i) for i in indices], "doubling", indices.start), 0


def _cmd_section(args) -> tuple[str, int]:
    kind = Kind.LUCAS if args.lucas else Kind.FIBONACCI
    if not args.gf:
        values = section_terms(SectionParams(args.d, args.h), kind, args.terms)
        return _emit_terms(args, values, "direct"), 0
    gf = section_gf(args.d, args.h, kind)
    num, den = list(gf.num.coeffs), list(gf.den.coeffs)
    if args.format == "json":
        return _json(_params(args), "closed", num=[str(c) for c in num], den=[str(c) for c in den]), 0
    if args.format == "csv":
        rows = [("num", i, c) for i, c in enumerate(num)] + [("den", i, c) for i, c in enumerate(den)]
        return _csv(["part", "n", "value"], rows), 0
    return f"{' '.join(map(str, num))}\n{' '.join(map(str, den))}\n", 0


def _cmd_conv(args) -> tuple[str, int]:
    kind = Kind.LUCAS if args.lucas else Kind.FIBONACCI
    p = SectionParams(args.d, args.h, args.s)
    values = ROUTES[args.route](p, args.terms, kind)
    return _emit_terms(args, values, args.route), 0


def _cmd_cheb(args) -> tuple[str, int]:
    build = monic_signed_u if args.monic else signed_u_explicit
    poly = build(args.n, args.s, args.eps)
    return _emit_terms(args, list(poly.coeffs), "explicit"), 0


def _cmd_verify(args, err: TextIO) -> tuple[str, int]:
    started = time.perf_counter()
    report = run_suite(
        args.suite, max_d=args.max_d, max_s=args.max_s, max_n=args.max_n, terms=args.terms
    )
    if not args.quiet:
        print(f"elapsed {time.perf_counter() - started:.3f}s", file=err)
    counts = [("cases", report.cases), ("passed", report.passed), ("failed", report.failed)]
    if args.format == "json":
        text = _json(
            _params(args),
            "closed-vs-oracle",
            terms=[str(v) for _, v in counts],
            failures=report.failures,
        )
    elif args.format == "csv":
        text = _csv(["field", "value"], counts)
    else:
        lines = [f"suite {report.suite}"] + [f"{k} {v}" for k, v in counts]
        lines += [f"FAIL {case}" for case in report.failures]
        text = "\n".join(lines) + "\n"
    return text, 0 if report.ok else 1


def run(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    """Parse ``argv``, write results to ``out`` and return the exit status."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command in ("fib", "lucas"):
            text, status = _cmd_sequence(args)
        elif args.command == "section":
            text, status = _cmd_section(args)
        elif args.command == "conv":
            text, status = _cmd_conv(args)
        elif args.command == "cheb":
            text, status = _cmd_cheb(args)
        else:
            text, status = _cmd_verify(args, err)
    except (UsageError, ValueError) as exc:
        print(f"{PROG}: error: {exc}", file=err)
        return 2
    out.write(text)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
