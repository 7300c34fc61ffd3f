"""
Command-line front end: ``sylvid gen | verify | bench``.

Exit codes: 0 all checks hold, 1 some identity failed, 2 I/O error,
64 usage error, 65 malformed or unsuitable input data.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .campaign import IDENTITIES, CampaignConfig, CheckParams, check_matrix, run_campaign
from .errors import (
    BoundsError,
    CapacityError,
    ConfigurationError,
    DomainError,
    MatrixFormatError,
    PivotError,
    ShapeError,
)
from .fraction_free import average_growth, growth_report, growth_tsv
from .indexlists import parse_index_list, parse_index_lists
from .matrix import format_matrix, read_matrix
from .rng import random_int_matrix, trial_rng

log = logging.getLogger("sylvid")

EXIT_OK, EXIT_FAIL, EXIT_IO, EXIT_USAGE, EXIT_DATA = 0, 1, 2, 64, 65
BENCH_MAX_ORDER = 12


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _size_range(text: str) -> tuple[int, int]:
    """``"5"`` or ``"2-8"``."""
    try:
        if "-" in text.strip("-"):
            lo, hi = text.split("-", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size {text!r}; use N or A-B")
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"size range {text!r} must be positive and nonempty")
    return lo, hi


def _index_list(text):
    try:
        return parse_index_list(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _index_lists(text):
    try:
        return parse_index_lists(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sylvid", description=__doc__.strip().splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="write a seeded random integer matrix")
    gen.add_argument("pos", nargs="*", metavar="ROWS COLS LO HI SEED", help="positional form of the flags")
    gen.add_argument("--rows", type=int)
    gen.add_argument("--cols", type=int)
    gen.add_argument("--lo", type=int, default=-9)
    gen.add_argument("--hi", type=int, default=9)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", help="output file (default stdout)")

    ver = sub.add_parser("verify", help="check an identity on a matrix file or a seeded campaign")
    ver.add_argument("identity", choices=IDENTITIES)
    ver.add_argument("--matrix", help="matrix file; without it a random campaign runs")
    ver.add_argument("--rows", type=_size_range, help="N or A-B")
    ver.add_argument("--cols", type=_size_range, help="N or A-B")
    ver.add_argument("--lo", type=int, default=-9)
    ver.add_argument("--hi", type=int, default=9)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--trials", type=int, default=1)
    for name in ("t", "s", "p", "q", "k"):
        ver.add_argument(f"--{name}", type=int)
    ver.add_argument("--I", dest="I", type=_index_list, help='row list, e.g. "(1,3)"')
    ver.add_argument("--J", dest="J", type=_index_list, help='column list, e.g. "(1,3)"')
    ver.add_argument("--lists", type=_index_lists, help='column lists J_k, e.g. "(1,3,4),(1,4,5)"')
    ver.add_argument("--row-lists", type=_index_lists, help="row lists I_k (bgm)")
    ver.add_argument("--draws", type=int, default=5, help="border-row draws per matrix (bgm)")
    fmt = ver.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="one JSON object per check (the default)")
    fmt.add_argument("--text", action="store_true", help="one aligned summary line per check")
    ver.add_argument("--out", help="output file (default stdout)")

    bench = sub.add_parser("bench", help="entry growth: fraction-free vs. rational elimination")
    bench.add_argument("n", nargs="?", type=int)
    bench.add_argument("--rows", dest="n_flag", type=int, help="matrix order (same as N)")
    bench.add_argument("--trials", type=int, default=20)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--lo", type=int, default=-99)
    bench.add_argument("--hi", type=int, default=99)
    bench.add_argument("--out", help="output file (default stdout)")
    return parser


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    if args.pos:
        if len(args.pos) != 5:
            raise UsageError("gen takes ROWS COLS LO HI SEED positionally, or flags")
        try:
            args.rows, args.cols, args.lo, args.hi, args.seed = map(int, args.pos)
        except ValueError:
            raise UsageError(f"gen arguments must be integers: {args.pos}")
    if args.rows is None or args.cols is None:
        raise UsageError("gen needs --rows and --cols")
    if args.rows < 1 or args.cols < 1:
        raise UsageError("matrix dimensions must be positive")
    if args.lo > args.hi:
        raise UsageError(f"empty entry range [{args.lo}, {args.hi}]")
    M = random_int_matrix(trial_rng(args.seed, 0), args.rows, args.cols, args.lo, args.hi)
    _emit(format_matrix(M), args.out)
    return EXIT_OK


def _params(args) -> CheckParams:
    return CheckParams(
        t=args.t, s=args.s, p=args.p, q=args.q, k=args.k,
        I=args.I, J=args.J, lists=args.lists, row_lists=args.row_lists, draws=args.draws,
    )


def cmd_verify(args) -> int:
    params = _params(args)
    lines = []
    failed = False
    render = (lambda r: r.summary()) if args.text else (lambda r: r.to_json())
    if args.matrix:
        M = read_matrix(args.matrix)
        try:
            reports = check_matrix(args.identity, M, params)
        except (ShapeError, BoundsError, PivotError) as exc:
            raise MatrixFormatError(f"matrix unsuitable for {args.identity}: {exc}")
        for r in reports:
            lines.append(render(r))
            failed |= r.verdict == "fails"
    else:
        if args.trials < 1:
            raise UsageError("--trials must be at least 1")
        cfg = CampaignConfig(
            args.identity, trials=args.trials, seed=args.seed, rows=args.rows, cols=args.cols,
            entries=(args.lo, args.hi), params=params,
        )
        skipped = 0
        for outcome in run_campaign(cfg):
            if outcome.skipped:
                skipped += 1
                log.info("trial %d skipped: %s", outcome.trial, outcome.skipped)
            for r in outcome.reports:
                lines.append(render(r))
                failed |= r.verdict == "fails"
        if skipped:
            print(f"# {skipped} of {args.trials} trials skipped (zero pivot)", file=sys.stderr)
    _emit("".join(line + "\n" for line in lines), args.out)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_bench(args) -> int:
    n = args.n if args.n is not None else args.n_flag
    if n is None:
        raise UsageError("bench needs the matrix order N")
    if not 1 <= n <= BENCH_MAX_ORDER:
        raise UsageError(f"bench order must lie in 1..{BENCH_MAX_ORDER}")
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    if args.lo > args.hi:
        raise UsageError(f"empty entry range [{args.lo}, {args.hi}]")
    stats, skipped = [], 0
    for k in range(args.trials):
        M = random_int_matrix(trial_rng(args.seed, k), n, n, args.lo, args.hi)
        try:
            stats.append(growth_report(M))
        except PivotError:
            skipped += 1
    print(f"# trials={args.trials} used={len(stats)} skipped={skipped}", file=sys.stderr)
    if not stats:
        print("sylvid: every trial hit a zero leading minor", file=sys.stderr)
        return EXIT_DATA
    _emit(growth_tsv(average_growth(stats)), args.out)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"sylvid: {exc}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    handler = {"gen": cmd_gen, "verify": cmd_verify, "bench": cmd_bench}[args.command]
    try:
        return handler(args)
    except UsageError as exc:
        print(f"sylvid: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConfigurationError, DomainError, CapacityError) as exc:
        print(f"sylvid: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MatrixFormatError as exc:
        print(f"sylvid: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"sylvid: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
