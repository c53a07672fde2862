"""
The verify command: run the check suite over a case stream and report.
"""

import argparse

from lib.config import CHECK_NAMES, MAX_FACTORIZATION_N, REPORT_FILE, SAMPLE_SIZE
from lib.harness import PAIR_CHECKS, CaseSpec, verify
from lib.perm_core import is_unipeak

from .shared import (
    UsageError,
    add_random_arguments,
    parse_checks,
    parse_permutation,
    parse_word,
    resolve_n,
    write_output,
)


def spec_from_args(args: argparse.Namespace) -> CaseSpec:
    """Build the case specification from the verify flags."""
    n = resolve_n(args)
    v = parse_permutation(args.v, n) if args.v else None
    w = parse_permutation(args.w, n) if args.w else None
    word = parse_word(args.word, n) if args.word is not None else None
    if word is not None:
        if w is not None and word.product() != w:
            raise UsageError(f"Word {word} is not a word for {w}")
        if not is_unipeak(word):
            raise UsageError(f"Word {word} is not unipeak")
    try:
        return CaseSpec(n=n, v=v, w=w, word=word, sample=None if args.exhaustive else args.sample,
                        seed=args.seed, trials=args.trials)
    except ValueError as e:
        raise UsageError(str(e)) from e


def run_verify(args: argparse.Namespace) -> int:
    """
    Run the selected checks and write the JSON report.

    Returns:
        0 when every check passes, 1 otherwise
    """
    spec = spec_from_args(args)
    checks = parse_checks(args.checks)
    if spec.n > MAX_FACTORIZATION_N and set(checks) & set(PAIR_CHECKS):
        raise UsageError(f"The factorization sweeps are limited to n <= {MAX_FACTORIZATION_N}, got n = {spec.n}")
    report = verify(spec, checks, jobs=args.jobs, verbose=not args.quiet)

    if args.output:
        write_output(report.to_json(include_timing=not args.no_timing) + "\n", args.output)

    if not args.quiet:
        print()
        if report.ok:
            print(f"✓ All {len(report.checks)} checks passed on {report.cases} cases")
        else:
            failed = [name for name, summary in report.checks.items() if summary.failed]
            print(f"✗ Failing checks: {', '.join(failed)}")
    return report.exit_code


def add_parser(subparsers):
    """Register the verify subcommand."""
    parser = subparsers.add_parser("verify", help="Run the verification suite")
    parser.add_argument("--n", type=int, help="Size of the symmetric group")
    parser.add_argument("--v", help="Only this lower permutation")
    parser.add_argument("--w", help="Only this upper permutation")
    parser.add_argument("--word", help="Only this reduced word")
    parser.add_argument("--checks", help=f"Comma-separated subset of: {', '.join(CHECK_NAMES)}, or 'all'")
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="Run every case (the default)")
    mode.add_argument("--sample", type=int, nargs="?", const=SAMPLE_SIZE,
                      help=f"Run a seeded random sample of cases (default size {SAMPLE_SIZE})")
    add_random_arguments(parser)
    parser.add_argument("--jobs", type=int, default=1, help="Worker processes")
    parser.add_argument("--output", nargs="?", const=REPORT_FILE, help="Write the JSON report")
    parser.add_argument("--no-timing", action="store_true", help="Leave wall times out of the report")
    parser.add_argument("--quiet", action="store_true", help="Only set the exit code")
    parser.set_defaults(func=run_verify)
