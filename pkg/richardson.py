#!/usr/bin/env python3
"""
Richardson Seeds

Build Ingermanson's and Leclerc's seeds for an open Richardson variety in
type A from a permutation v and a unipeak reduced word for w, and verify
that the two agree.

Usage:
    python richardson.py pds --v 3214 --word 1,2,1,3,2,1
    python richardson.py diagram --n 5 --v 12534 --word 4,3,2,1,4,3,2,3,4 --annotations monomials
    python richardson.py seed --n 3 --word 2,1,2 --construction leclerc --format json
    python richardson.py quiver --n 3 --word 2,1,2 --format dot
    python richardson.py eval-minor --rows 1,2 --cols 2,3 --n 3
    python richardson.py verify --n 3 --checks appearance,quiver --output

Exit codes: 0 success, 1 check failures or errors, 2 usage errors.
"""

import argparse
import sys

from dotenv import load_dotenv

from cli import inspect_cmd, verify_cmd
from cli.shared import UsageError

# Load environment variables
load_dotenv()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="richardson",
        description="Cluster seeds of open Richardson varieties in type A",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    inspect_cmd.add_parsers(subparsers)
    verify_cmd.add_parser(subparsers)
    return parser


def main(argv=None) -> int:
    """Parse arguments and dispatch to the subcommand."""
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        return args.func(args)
    except UsageError as e:
        print(f"Error: {e}")
        return 2
    except Exception as e:
        print(f"Error: {e}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
