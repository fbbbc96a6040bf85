"""Command line interface.

Exit status: 0 on success, 1 when a verification or decomposition fails,
2 on usage and parse errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .decompose import NotInCone, greedy_decompose
from .diagram import BettiDiagram, DegreeSequence, pure_diagram
from .formats import FORMATS, FormatError, format_rational, parse_diagram, render_diagram
from .hilbert import NotDivisible, multiplicity
from .monomial import hochster_betti, parse_ideal
from .secant import SecantParams, VerificationReport, assemble_betti, sweep

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _read_diagram(path: str, fmt: str | None) -> BettiDiagram:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc}") from None
    if fmt is None:
        suffix = Path(path).suffix.lower()
        fmt = "csv" if suffix == ".csv" else "json" if suffix == ".json" else None
        if fmt is None:
            fmt = "json" if text.lstrip().startswith("{") else "csv"
    return parse_diagram(text, fmt)


def _emit(d: BettiDiagram, fmt: str) -> None:
    sys.stdout.write(render_diagram(d, fmt))


def _print_residual(exc) -> None:
    residual = getattr(exc, "residual", None)
    if isinstance(residual, BettiDiagram):
        print("residual diagram:", file=sys.stderr)
        sys.stderr.write(render_diagram(residual, "table"))


def cmd_pure(args) -> int:
    try:
        e = DegreeSequence(args.sequence)
        d = pure_diagram(e)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    _emit(d, args.format)
    return EXIT_OK


def cmd_secant(args) -> int:
    if (args.r is None) == (args.degree is None):
        raise UsageError("give exactly one of --r and --degree")
    try:
        p = SecantParams(args.k, args.r) if args.r is not None else SecantParams.from_degree(args.k, args.degree)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(assemble_betti(p), args.format)
    return EXIT_OK


def cmd_decompose(args) -> int:
    d = _read_diagram(args.input, args.input_format)
    try:
        dec = greedy_decompose(d)
    except NotInCone as exc:
        print(f"error: not in the cone of pure diagrams: {exc}", file=sys.stderr)
        _print_residual(exc)
        return EXIT_FAIL
    total = dec.total()
    print("coefficient\tnormalized\tsequence")
    for c, e in dec:
        print(f"{format_rational(c)}\t{format_rational(c / total)}\t{','.join(map(str, e))}")
    return EXIT_OK


def cmd_multiplicity(args) -> int:
    d = _read_diagram(args.input, args.input_format)
    if d.is_empty():
        raise UsageError("empty diagram")
    try:
        mult = multiplicity(d)
    except NotDivisible as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("input diagram:", file=sys.stderr)
        sys.stderr.write(render_diagram(d, "table"))
        if exc.remainder is not None:
            print(f"undivided numerator: {exc.remainder}", file=sys.stderr)
        return EXIT_FAIL
    print(format_rational(mult))
    return EXIT_OK


def cmd_hochster(args) -> int:
    try:
        ideal = parse_ideal(args.ideal, args.vars)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(hochster_betti(ideal), args.format)
    return EXIT_OK


def format_report(report: VerificationReport, verbose: bool = False) -> str:
    p = report.params
    npass = sum(c.passed for c in report.checks)
    status = "PASS" if report.passed else "FAIL"
    lines = [f"k={p.k} r={p.r}: {status} ({npass}/{len(report.checks)} checks)"]
    for check in report.checks:
        if verbose or not check.passed:
            mark = "ok" if check.passed else "FAILED"
            lines.append(f"  [{mark}] {check.name}: expected {_show(check.expected)}, got {_show(check.computed)}")
    return "\n".join(lines)


def _show(value) -> str:
    if isinstance(value, bool):
        return str(value)
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return format_rational(value)
    if isinstance(value, list):
        return "[" + ", ".join(_show(v) for v in value) + "]"
    if isinstance(value, tuple):
        return "(" + ", ".join(_show(v) for v in value) + ")"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_show(v)}" for k, v in value.items()) + "}"
    return str(value)


def cmd_verify(args) -> int:
    if args.k_max < args.k_min or args.k_min < 0 or args.r_extra < 0:
        raise UsageError("need 0 <= --k-min <= --k-max and --r-extra >= 0")
    reports = sweep(args.k_max, args.r_extra, k_min=args.k_min)
    for report in reports:
        print(format_report(report, args.verbose))
    failed = [r for r in reports if not r.passed]
    print(f"{len(reports) - len(failed)}/{len(reports)} grid points passed")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="secantbetti", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt_arg(p):
        p.add_argument("--format", choices=FORMATS, default="table")

    def input_args(p):
        p.add_argument("--input", required=True, help="diagram file (json or csv), '-' for stdin")
        p.add_argument("--input-format", choices=("json", "csv"), default=None)

    p = sub.add_parser("pure", help="print the pure diagram of a degree sequence")
    p.add_argument("--sequence", type=_int_list, required=True)
    fmt_arg(p)
    p.set_defaults(func=cmd_pure)

    p = sub.add_parser("secant", help="print the Betti diagram of a genus 2 secant variety")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--degree", type=int, help="degree of the line bundle; r = degree - 2")
    fmt_arg(p)
    p.set_defaults(func=cmd_secant)

    p = sub.add_parser("decompose", help="greedy Boij-Soderberg decomposition")
    input_args(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("multiplicity", help="multiplicity of a Cohen-Macaulay diagram")
    input_args(p)
    p.set_defaults(func=cmd_multiplicity)

    p = sub.add_parser("hochster", help="Betti diagram of S/I for a squarefree monomial ideal")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--ideal", required=True, help='e.g. "x0*x2,x1*x3" or "1010,0101"')
    fmt_arg(p)
    p.set_defaults(func=cmd_hochster)

    p = sub.add_parser("verify", help="check the secant diagrams over a (k, r) grid")
    p.add_argument("--k-max", type=int, default=6)
    p.add_argument("--k-min", type=int, default=0)
    p.add_argument("--r-extra", type=int, default=12, help="r ranges over 2k+3 .. 2k+3+r_extra")
    p.add_argument("-v", "--verbose", action="store_true", help="print every check")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FormatError) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
