"""
Shared fixtures: the worked examples used across the test modules.
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from lib.perm_core import Permutation, ReducedWord  # noqa: E402
from lib.wiring import build_diagram  # noqa: E402

EXAMPLE_V = "12534"
EXAMPLE_WORD = (4, 3, 2, 1, 4, 3, 2, 3, 4)


@pytest.fixture
def single_crossing():
    """(e, [1]) in S_2."""
    return build_diagram(Permutation.identity(2), ReducedWord((1,), 2))


@pytest.fixture
def longest_n3():
    """(e, [2,1,2]): the longest element of S_3 with its unipeak word."""
    return build_diagram(Permutation.identity(3), ReducedWord((2, 1, 2), 3))


@pytest.fixture
def worked_example():
    """(12534, [4,3,2,1,4,3,2,3,4]) in S_5, hollow crossings 5 and 8."""
    return build_diagram(Permutation.parse(EXAMPLE_V), ReducedWord(EXAMPLE_WORD, 5))


@pytest.fixture
def top_cell():
    """v = w: every crossing hollow."""
    word = ReducedWord((2, 1, 2), 3)
    return build_diagram(word.product(), word)


def all_diagrams(n: int):
    """Every (v <= w, unipeak word of w) diagram in S_n."""
    from lib.harness import CaseSpec, enumerate_cases

    return [build_diagram(case.v, case.word) for case in enumerate_cases(CaseSpec(n=n))]


@pytest.fixture(scope="session")
def diagrams_n3():
    return all_diagrams(3)
