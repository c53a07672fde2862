"""
Shared utilities and helper functions for the command-line interface.
"""

import argparse
from pathlib import Path

from lib.config import CHECK_NAMES, DEFAULT_CHECKS, DEFAULT_SEED, DEFAULT_TRIALS, MAX_CLI_N
from lib.perm_core import Permutation, ReducedWord, bruhat_leq
from lib.wiring import WiringDiagram, build_diagram


class UsageError(ValueError):
    """Bad command-line arguments; the CLI exits with 2."""


def parse_permutation(text: str, n: int | None = None) -> Permutation:
    """
    Parse a one-line permutation written as a digit string, e.g. "12534".

    Args:
        text: Digit string
        n: Size to pad to with fixed points

    Returns:
        The permutation

    Raises:
        UsageError if the text is not a permutation of 1..n
    """
    text = text.strip()
    if not text.isdigit():
        raise UsageError(f"Permutations are digit strings such as 2143, got {text!r}")
    if len(text) > MAX_CLI_N or (n is not None and n > MAX_CLI_N):
        raise UsageError(f"One-line permutations on the command line need n <= {MAX_CLI_N}")
    try:
        return Permutation.parse(text, n)
    except ValueError as e:
        raise UsageError(f"Bad permutation {text!r}: {e}") from e


def parse_word(text: str, n: int) -> ReducedWord:
    """Parse a comma-separated reduced word such as "2,1,2"."""
    try:
        return ReducedWord.parse(text, n)
    except ValueError as e:
        raise UsageError(f"Bad word {text!r}: {e}") from e


def parse_checks(text: str | None) -> tuple[str, ...]:
    """Comma-separated check names; "all" selects every check, None the default set."""
    if text is None:
        return DEFAULT_CHECKS
    if text.strip() == "all":
        return CHECK_NAMES
    names = tuple(name.strip() for name in text.split(",") if name.strip())
    unknown = [name for name in names if name not in CHECK_NAMES]
    if unknown:
        raise UsageError(f"Unknown checks {unknown}; choose from {', '.join(CHECK_NAMES)}")
    return names


def resolve_n(args: argparse.Namespace) -> int:
    """Take n from --n, or from the length of --v or --w."""
    if args.n is not None:
        if args.n < 1:
            raise UsageError(f"--n must be positive, got {args.n}")
        return args.n
    for attr in ("v", "w"):
        text = getattr(args, attr, None)
        if text:
            return len(text.strip())
    raise UsageError("Pass --n, or a permutation whose length gives n")


def diagram_from_args(args: argparse.Namespace) -> WiringDiagram:
    """Build the diagram for --n, --v (identity by default) and --word."""
    n = resolve_n(args)
    if args.word is None:
        raise UsageError("Pass a reduced word with --word")
    v = parse_permutation(args.v, n) if args.v else Permutation.identity(n)
    word = parse_word(args.word, n)
    if not bruhat_leq(v, word.product()):
        raise UsageError(f"v = {v} is not below w = {word.product()} in Bruhat order")
    return build_diagram(v, word)


def add_case_arguments(parser: argparse.ArgumentParser, word_required: bool = True):
    """Add --n, --v and --word to a subcommand."""
    parser.add_argument("--n", type=int, help="Size of the symmetric group")
    parser.add_argument("--v", help="Lower permutation in one-line notation (default: identity)")
    parser.add_argument("--word", required=word_required, help="Comma-separated reduced word, e.g. 4,3,2,1")


def add_random_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Random seed")
    parser.add_argument("--trials", type=int, default=DEFAULT_TRIALS, help="Random evaluations per identity")


def print_header(title: str):
    """Print a section banner."""
    print("=" * 60)
    print(title)
    print("=" * 60)


def write_output(text: str, path: str | None = None):
    """
    Write text to a file, or to stdout when no path is given.

    Args:
        text: Content to write
        path: Output file path
    """
    if path is None:
        print(text, end="" if text.endswith("\n") else "\n")
        return
    Path(path).write_text(text, encoding="utf-8")
    print(f"✓ Wrote {path}")
