import argparse
import logging
import sys
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from tools.export import format_cell, render_outcomes_jsonl, render_reports_json, render_triangle, write_text

from . import __version__
from .env import Settings, load_settings
from .errors import BadRange, GenStirlingError, LimitExceeded
from .identities import IDENTITY_IDS, default_ranges, rows_needed, run_suite, suite_exit_code
from .oracle import enumerate_outcomes, enumerate_weight
from .polycore import MultiPoly, parse_rational
from .profiles import PROFILE_NAMES, get_profile, specialize
from .report import summarize
from .stirling import build_table, explicit_value, numeric_table

logger = logging.getLogger(__name__)

COMMANDS = ("table", "value", "oracle", "check", "export")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genstirling",
        description="Exact generalized Stirling numbers L(n, k; alpha, beta): triangles, values, oracle runs and identity checks",
    )
    parser.add_argument("command", choices=COMMANDS, help="What to run")
    parser.add_argument("--n", dest="n", type=int, default=None, help="Row index (table/export: last row)")
    parser.add_argument("--k", dest="k", type=int, default=None, help="Column index (value/oracle)")
    parser.add_argument("--alpha", dest="alpha", default=None, help="Rational alpha, e.g. 2 or -1/2")
    parser.add_argument("--beta", dest="beta", default=None, help="Rational beta, e.g. 1 or 3/4")
    parser.add_argument(
        "--profile",
        dest="profile",
        default=None,
        help=f"Specialization profile ({', '.join(PROFILE_NAMES)}); parametric ones as name:param",
    )
    parser.add_argument("--format", dest="fmt", default="text", choices=["text", "json", "csv"], help="Triangle output format")
    parser.add_argument("--out", dest="out", default=None, help="Write output to this file instead of stdout")
    parser.add_argument("--cap", dest="cap", type=int, default=None, help="Oracle cap on n (overrides GENSTIRLING_ORACLE_CAP)")
    parser.add_argument("--dump", dest="dump", action="store_true", help="oracle: print every outcome as JSON lines")
    parser.add_argument("--factor", dest="factor", action="store_true", help="value: print the factorised polynomial")

    # Identity suite
    parser.add_argument("--max-n", dest="max_n", type=int, default=8, help="check: largest target row (default: 8)")
    parser.add_argument("--max-parts", dest="max_parts", type=int, default=3, help="check: most parts in the multinomial convolution")
    parser.add_argument(
        "--identity",
        dest="identities",
        action="append",
        default=None,
        choices=IDENTITY_IDS,
        help="check: run only this identity (repeatable)",
    )
    parser.add_argument("--threads", dest="threads", type=int, default=None, help="check: worker threads (overrides GENSTIRLING_THREADS)")
    parser.add_argument("--verbose", "-v", dest="verbose", action="store_true", help="Debug logging on stderr")
    return parser


def _validate(args: argparse.Namespace) -> Optional[str]:
    """Flag combinations argparse cannot express; returns a usage message or None."""
    if args.command in ("table", "export", "value", "oracle") and args.n is None:
        return f"{args.command} needs --n"
    if args.command in ("value", "oracle") and args.k is None:
        return f"{args.command} needs --k"
    if (args.alpha is None) != (args.beta is None):
        return "--alpha and --beta go together"
    if args.profile and args.alpha is not None:
        return "--profile cannot be combined with --alpha/--beta"
    if args.command == "export":
        if not args.out:
            return "export needs --out"
        if args.fmt == "text":
            return "export writes json or csv; pass --format json or --format csv"
    if args.factor and (args.command != "value" or args.profile or args.alpha is not None):
        return "--factor applies to polynomial values only"
    if args.dump and args.command != "oracle":
        return "--dump applies to the oracle command only"
    if args.threads is not None and args.threads < 1:
        return "--threads must be at least 1"
    return None


def _configure_logging(verbose: bool, settings: Settings) -> None:
    level = logging.DEBUG if verbose else getattr(logging, settings.log_level, logging.WARNING)
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")


def _point(args: argparse.Namespace) -> Optional[Tuple[Fraction, Fraction]]:
    if args.profile:
        profile = get_profile(args.profile)
        return profile.alpha, profile.beta
    if args.alpha is not None:
        return parse_rational(args.alpha), parse_rational(args.beta)
    return None


def _require_limit(n: int, limit: int, what: str) -> None:
    if n < 0:
        raise BadRange(f"--n must be non-negative, got {n}")
    if n > limit:
        raise LimitExceeded(f"{what} limited to n <= {limit}, got {n}")


def _triangle_rows(args: argparse.Namespace, settings: Settings) -> Sequence[Sequence[object]]:
    if args.profile:
        _require_limit(args.n, settings.max_numeric_n, "Numeric triangles are")
        return specialize(args.profile, args.n)
    point = _point(args)
    if point is not None:
        _require_limit(args.n, settings.max_numeric_n, "Numeric triangles are")
        return numeric_table(point[0], point[1], args.n)
    _require_limit(args.n, settings.max_poly_n, "Polynomial triangles are")
    return build_table(args.n).rows


def cmd_table(args: argparse.Namespace, settings: Settings) -> int:
    text = render_triangle(_triangle_rows(args, settings), args.fmt)
    write_text(text, args.out or sys.stdout)
    return 0


def cmd_export(args: argparse.Namespace, settings: Settings) -> int:
    write_text(render_triangle(_triangle_rows(args, settings), args.fmt), args.out)
    print(f"Wrote {args.fmt} triangle to {args.out}", file=sys.stderr)
    return 0


def _factor_text(poly: MultiPoly) -> str:
    import sympy

    return str(sympy.factor(poly.to_sympy()))


def cmd_value(args: argparse.Namespace, settings: Settings) -> int:
    n, k = args.n, args.k
    if k < 0 or k > n:
        raise BadRange(f"value needs 0 <= k <= n, got n={n}, k={k}")
    point = _point(args)
    if point is None:
        _require_limit(n, settings.max_poly_n, "Polynomial values are")
        poly = build_table(n).entry(n, k)
        text = _factor_text(poly) if args.factor else poly.to_str()
    else:
        _require_limit(n, settings.max_numeric_n, "Numeric values are")
        alpha, beta = point
        if beta == 0:
            # the explicit formula divides by beta^k
            value = numeric_table(alpha, beta, n)[n][k]
        else:
            value = explicit_value(n, k, alpha, beta)
        text = format_cell(Fraction(value))
    write_text(text + "\n", args.out or sys.stdout)
    return 0


def cmd_oracle(args: argparse.Namespace, settings: Settings) -> int:
    cap = settings.oracle_cap if args.cap is None else args.cap
    if args.dump:
        text = render_outcomes_jsonl(enumerate_outcomes(args.n, args.k, cap=cap))
    else:
        text = enumerate_weight(args.n, args.k, cap=cap).to_str() + "\n"
    write_text(text, args.out or sys.stdout)
    return 0


def cmd_check(args: argparse.Namespace, settings: Settings) -> int:
    cap = settings.oracle_cap if args.cap is None else args.cap
    ranges = default_ranges(
        args.max_n,
        max_parts=args.max_parts,
        oracle_max_n=min(8, cap),
        labeled_max_n=min(5, cap),
        only=args.identities,
    )
    needed = rows_needed(ranges)
    if needed > settings.max_poly_n:
        raise LimitExceeded(f"Suite needs table rows up to {needed}; limit is {settings.max_poly_n}")
    threads = args.threads or settings.threads
    reports = run_suite(ranges, build_table(needed), threads=threads, progress_callback=lambda s: logger.debug("check %s", s))
    write_text(render_reports_json(reports), args.out or sys.stdout)
    counts = summarize(reports)
    print(
        "checks: {total} passed: {passed} failed: {failed} expected failures: {expected_failures}".format(**counts),
        file=sys.stderr,
    )
    return suite_exit_code(reports)


HANDLERS = {
    "table": cmd_table,
    "value": cmd_value,
    "oracle": cmd_oracle,
    "check": cmd_check,
    "export": cmd_export,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    settings = load_settings()
    _configure_logging(args.verbose, settings)
    if args.verbose:
        print(f"genstirling {__version__}", file=sys.stderr)

    problem = _validate(args)
    if problem:
        parser.print_usage(sys.stderr)
        print(f"genstirling: error: {problem}", file=sys.stderr)
        return 2

    try:
        return HANDLERS[args.command](args, settings)
    except GenStirlingError as exc:
        print(f"genstirling: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
