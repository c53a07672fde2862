"""
Single-case commands: pds, diagram, seed, quiver and eval-minor.

Each handler takes the parsed arguments and returns an exit code.
"""

import argparse
import json

import sympy as sp

from lib.config import DEFAULT_SEED
from lib.exact_minors import eval_minor, random_matrix, random_unitriangular, random_upper_triangular
from lib.export import ANNOTATIONS, FORMATS, export_seed, render
from lib.ingermanson import IngSeed, build_ing_seed
from lib.leclerc import LecSeed, build_lec_seed
from lib.shapes import MinorIndex
from lib.wiring import WiringDiagram

from .shared import UsageError, add_case_arguments, diagram_from_args, print_header, write_output

CONSTRUCTIONS = ("ingermanson", "leclerc")
RANDOM_KINDS = {
    "unitriangular": random_unitriangular,
    "upper": random_upper_triangular,
    "general": random_matrix,
}


def build_seed(d: WiringDiagram, construction: str) -> IngSeed | LecSeed:
    if construction == "ingermanson":
        return build_ing_seed(d)
    if construction == "leclerc":
        return build_lec_seed(d)
    raise UsageError(f"Unknown construction {construction!r}, expected one of {', '.join(CONSTRUCTIONS)}")


def run_pds(args: argparse.Namespace) -> int:
    """Print the positive distinguished subexpression of v in the word."""
    d = diagram_from_args(args)
    if args.format == "json":
        data = {
            "v": str(d.v),
            "w": str(d.w),
            "word": list(d.word.letters),
            "mask": [int(b) for b in d.mask.bits],
            "hollow": list(d.hollow),
            "solid": list(d.solid),
        }
        write_output(json.dumps(data, indent=2) + "\n", args.output)
        return 0

    print_header(f"PDS of v = {d.v} in [{d.word}] (w = {d.w})")
    print(f"Mask:   {''.join(str(int(b)) for b in d.mask.bits) or '(empty)'}")
    print(f"Hollow: {list(d.hollow)}")
    print(f"Solid:  {list(d.solid)}")
    print(f"Unipeak word: {'yes' if d.unipeak else 'no'}")
    return 0


def run_diagram(args: argparse.Namespace) -> int:
    d = diagram_from_args(args)
    write_output(render(d, args.format, args.annotations), args.output)
    return 0


def _print_seed(seed: IngSeed | LecSeed, construction: str):
    print_header(f"{construction.capitalize()} seed: {len(seed.variables)} variables")
    for var in seed.variables:
        mark = "frozen " if var.frozen else "mutable"
        line = f"  {var.label:>3} {mark} {var.minor}"
        if isinstance(seed, IngSeed):
            line += f"  = {var.monomial.format('D')}"
        print(line)


def run_seed(args: argparse.Namespace) -> int:
    """Print or export a seed."""
    d = diagram_from_args(args)
    seed = build_seed(d, args.construction)
    if args.format == "text":
        _print_seed(seed, args.construction)
        return 0
    write_output(export_seed(seed, args.format), args.output)
    return 0


def run_quiver(args: argparse.Namespace) -> int:
    d = diagram_from_args(args)
    seed = build_seed(d, args.construction)
    if args.format == "dot":
        write_output(export_seed(seed, "dot"), args.output)
        return 0

    quiver = seed.quiver
    print_header(f"{args.construction.capitalize()} quiver on {len(quiver.vertices)} vertices")
    print(f"Frozen: {sorted(quiver.frozen)}")
    print("-" * 60)
    for source, target, count in quiver.arrows:
        print(f"  {source} -> {target}" + (f"  (x{count})" if count > 1 else ""))
    for problem in quiver.defects():
        print(f"  ✗ {problem}")
    return 0


def parse_matrix(text: str) -> sp.Matrix:
    """Rows separated by ';', entries by ','; entries may be fractions like 3/4."""
    try:
        rows = [[sp.Rational(entry.strip()) for entry in row.split(",")] for row in text.split(";") if row.strip()]
    except (TypeError, ValueError) as e:
        raise UsageError(f"Bad matrix {text!r}: {e}") from e
    if not rows or any(len(row) != len(rows) for row in rows):
        raise UsageError(f"Matrix must be square, got {text!r}")
    return sp.Matrix(rows)


def parse_minor(rows: str, cols: str) -> MinorIndex:
    """Row and column sets from comma-separated lists."""
    try:
        return MinorIndex.of([int(r) for r in rows.split(",") if r.strip()],
                             [int(c) for c in cols.split(",") if c.strip()])
    except ValueError as e:
        raise UsageError(f"Bad minor rows={rows!r} cols={cols!r}: {e}") from e


def run_eval_minor(args: argparse.Namespace) -> int:
    """Evaluate a minor on a given or random matrix."""
    idx = parse_minor(args.rows, args.cols)
    if args.matrix:
        m = parse_matrix(args.matrix)
    else:
        if args.n is None:
            raise UsageError("Pass --matrix, or --n for a random matrix")
        if args.n < 1:
            raise UsageError(f"--n must be positive, got {args.n}")
        m = RANDOM_KINDS[args.random](args.n, seed=args.seed)
    if any(k > m.rows for k in idx.rows + idx.cols):
        raise UsageError(f"{idx} does not fit a {m.rows}x{m.cols} matrix")
    if not args.matrix:
        print(f"Random {args.random} matrix (seed {args.seed}):")
        sp.pprint(m)
    print(f"{idx} = {eval_minor(m, idx)}")
    return 0


def add_parsers(subparsers):
    """Register the single-case subcommands."""
    pds_parser = subparsers.add_parser("pds", help="Positive distinguished subexpression")
    add_case_arguments(pds_parser)
    pds_parser.add_argument("--format", choices=("text", "json"), default="text")
    pds_parser.add_argument("--output", help="Write to a file instead of stdout")
    pds_parser.set_defaults(func=run_pds)

    diagram_parser = subparsers.add_parser("diagram", help="Render the wiring diagram")
    add_case_arguments(diagram_parser)
    diagram_parser.add_argument("--format", choices=FORMATS, default="ascii")
    diagram_parser.add_argument("--annotations", choices=ANNOTATIONS, default="labels")
    diagram_parser.add_argument("--output", help="Write to a file instead of stdout")
    diagram_parser.set_defaults(func=run_diagram)

    seed_parser = subparsers.add_parser("seed", help="Cluster variables of a seed")
    add_case_arguments(seed_parser)
    seed_parser.add_argument("--construction", choices=CONSTRUCTIONS, default="ingermanson")
    seed_parser.add_argument("--format", choices=("text", "json", "dot"), default="text")
    seed_parser.add_argument("--output", help="Write to a file instead of stdout")
    seed_parser.set_defaults(func=run_seed)

    quiver_parser = subparsers.add_parser("quiver", help="Quiver of a seed")
    add_case_arguments(quiver_parser)
    quiver_parser.add_argument("--construction", choices=CONSTRUCTIONS, default="ingermanson")
    quiver_parser.add_argument("--format", choices=("text", "dot"), default="text")
    quiver_parser.add_argument("--output", help="Write to a file instead of stdout")
    quiver_parser.set_defaults(func=run_quiver)

    minor_parser = subparsers.add_parser("eval-minor", help="Evaluate a minor exactly")
    minor_parser.add_argument("--rows", required=True, help="Comma-separated row set")
    minor_parser.add_argument("--cols", required=True, help="Comma-separated column set")
    minor_parser.add_argument("--matrix", help="Square matrix, rows separated by ';'")
    minor_parser.add_argument("--n", type=int, help="Size of a random matrix")
    minor_parser.add_argument("--random", choices=tuple(RANDOM_KINDS), default="unitriangular")
    minor_parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Random seed")
    minor_parser.set_defaults(func=run_eval_minor)
