"""
Lattice paths, Young diagrams and skew shapes in the n x n grid.

Boxes are (row, col) pairs indexed like matrix entries, and the box (r, c) has
content r - c + n, so the upper-right box has content 1. The path of a set I
starts at the upper-right corner; its step k (k <= n) goes down when k is in I
and left otherwise, and its remaining |I| steps go left. Every box of content k
has its top and right edges on step k and its bottom and left edges on step k+1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from lib.perm_core import IndexSet, gale_leq, index_set


@dataclass(frozen=True, order=True)
class MinorIndex:
    """Row and column sets of a minor."""
    rows: IndexSet
    cols: IndexSet

    def __post_init__(self):
        if len(self.rows) != len(self.cols):
            raise ValueError(f"Minor needs equal sizes, got rows {list(self.rows)} and cols {list(self.cols)}")

    @classmethod
    def of(cls, rows, cols) -> "MinorIndex":
        return cls(index_set(rows), index_set(cols))

    def __len__(self) -> int:
        return len(self.rows)

    def __str__(self) -> str:
        rows = ",".join(str(r) for r in self.rows)
        cols = ",".join(str(c) for c in self.cols)
        return f"D[{rows}|{cols}]"

    def is_gale_ordered(self) -> bool:
        return gale_leq(self.rows, self.cols)

    def truncate(self, q: int) -> "MinorIndex":
        """Intersect both sets with [q]."""
        return MinorIndex(tuple(r for r in self.rows if r <= q), tuple(c for c in self.cols if c <= q))


@dataclass(frozen=True)
class LatticePath:
    vertical_steps: IndexSet
    n: int

    def __post_init__(self):
        index_set(self.vertical_steps, self.n)

    def steps(self) -> list[str]:
        """'V' or 'H' for each of the n + |I| steps."""
        head = ["V" if k in self.vertical_steps else "H" for k in range(1, self.n + 1)]
        return head + ["H"] * len(self.vertical_steps)

    def points(self) -> list[tuple[int, int]]:
        """(depth, x) after each step, starting from (0, n)."""
        depth, x = 0, self.n
        points = [(depth, x)]
        for step in self.steps():
            if step == "V":
                depth += 1
            else:
                x -= 1
            points.append((depth, x))
        return points

    def column_depths(self) -> dict[int, int]:
        """Depth of the horizontal step crossing column c, for c in [n]."""
        depths = {}
        depth, column = 0, self.n
        for step in self.steps():
            if step == "V":
                depth += 1
            else:
                depths[column] = depth
                column -= 1
        return depths


def young_diagram(I, n: int) -> frozenset[tuple[int, int]]:
    """Boxes of the region between the path of I and the top and right edges."""
    depths = LatticePath(index_set(I, n), n).column_depths()
    return frozenset((r, c) for c, depth in depths.items() for r in range(1, depth + 1))


def content(box: tuple[int, int], n: int) -> int:
    r, c = box
    return r - c + n


@dataclass(frozen=True)
class SkewShape:
    """The region between the path of I (below) and the path of J (above), for I <= J."""
    rows: IndexSet
    cols: IndexSet
    n: int

    def __post_init__(self):
        index_set(self.rows, self.n)
        index_set(self.cols, self.n)
        if not gale_leq(self.rows, self.cols):
            raise ValueError(f"{list(self.rows)} is not Gale-below {list(self.cols)}")

    @property
    def index(self) -> MinorIndex:
        return MinorIndex(self.rows, self.cols)

    @cached_property
    def boxes(self) -> frozenset[tuple[int, int]]:
        lower = LatticePath(self.rows, self.n).column_depths()
        upper = LatticePath(self.cols, self.n).column_depths()
        return frozenset(
            (r, c) for c in range(1, self.n + 1) for r in range(upper[c] + 1, lower[c] + 1)
        )

    def __len__(self) -> int:
        return len(self.boxes)

    def is_empty(self) -> bool:
        return not self.boxes

    def contents(self) -> list[int]:
        return sorted({content(box, self.n) for box in self.boxes})

    def content_profile(self) -> tuple[int, ...]:
        """Number of boxes of each content k in [n-1]."""
        counts = [0] * (self.n - 1)
        for box in self.boxes:
            counts[content(box, self.n) - 1] += 1
        return tuple(counts)


def skew_shape(I, J, n: int) -> SkewShape:
    return SkewShape(index_set(I, n), index_set(J, n), n)


def content_profile_from_steps(I, J, n: int) -> tuple[int, ...]:
    """|I ∩ [k]| - |J ∩ [k]| for k in [n-1], the box count of content k."""
    return tuple(
        sum(1 for i in I if i <= k) - sum(1 for j in J if j <= k) for k in range(1, n)
    )


def _content_runs(contents: list[int]) -> list[tuple[int, int]]:
    runs = []
    for k in contents:
        if runs and runs[-1][1] == k - 1:
            runs[-1] = (runs[-1][0], k)
        else:
            runs.append((k, k))
    return runs


def components(s: SkewShape) -> list[SkewShape]:
    """
    Connected components of a skew shape, northeast (lowest contents) first.

    The component with contents [a, b] keeps the lower path I and takes the
    steps of J only on [a, b+1], where the two paths have diverged.
    """
    result = []
    for a, b in _content_runs(s.contents()):
        cols = (
            [i for i in s.rows if i < a]
            + [j for j in s.cols if a <= j <= b + 1]
            + [i for i in s.rows if i > b + 1]
        )
        result.append(SkewShape(s.rows, index_set(cols, s.n), s.n))

    expected = sorted(sorted(part) for part in _box_components(s.boxes))
    found = sorted(sorted(part.boxes) for part in result)
    if expected != found:
        raise RuntimeError(f"Content runs of {s.index} do not match its connected components")
    return result


def _box_components(boxes) -> list[set]:
    graph = nx.Graph()
    graph.add_nodes_from(boxes)
    for r, c in boxes:
        for neighbor in ((r + 1, c), (r, c + 1)):
            if neighbor in boxes:
                graph.add_edge((r, c), neighbor)
    return list(nx.connected_components(graph))


def common_steps(I, J) -> set[int]:
    """Vertical steps shared by both paths while the paths coincide."""
    I, J = set(I), set(J)
    return {
        k for k in I & J
        if sum(1 for i in I if i < k) == sum(1 for j in J if j < k)
    }


def canonical_key(s: SkewShape) -> MinorIndex:
    """
    The pair (I \\ C, J \\ C) with C the common vertical steps.

    Two shapes share a key exactly when they are translates of each other
    along the anti-diagonal.
    """
    shared = common_steps(s.rows, s.cols)
    return MinorIndex(
        tuple(i for i in s.rows if i not in shared),
        tuple(j for j in s.cols if j not in shared),
    )


def normalized_boxes(boxes) -> frozenset[tuple[int, int]]:
    """Slide a box set up the diagonal until its top row is row 1."""
    if not boxes:
        return frozenset()
    top = min(r for r, _ in boxes)
    return frozenset((r - top + 1, c - top + 1) for r, c in boxes)


def translate(s: SkewShape, depth: int, tail=()) -> SkewShape:
    """
    Translate a connected shape along the anti-diagonal.

    The paths share `depth` vertical steps before the shape starts and the
    vertical steps `tail` after it, so `depth` sets the new top row.
    """
    contents = s.contents()
    if not contents:
        raise ValueError("Cannot translate an empty shape")
    if len(_content_runs(contents)) != 1:
        raise ValueError(f"Shape {s.index} is not connected")
    a, b = contents[0], contents[-1]
    if not 0 <= depth <= a - 1:
        raise ValueError(f"Depth {depth} outside 0..{a - 1} for a shape starting at content {a}")
    tail = index_set(tail, s.n)
    if tail and tail[0] <= b + 1:
        raise ValueError(f"Tail steps {list(tail)} must follow step {b + 1}")
    head = tuple(range(1, depth + 1))
    rows = head + tuple(i for i in s.rows if a <= i <= b + 1) + tail
    cols = head + tuple(j for j in s.cols if a <= j <= b + 1) + tail
    return SkewShape(index_set(rows, s.n), index_set(cols, s.n), s.n)


def northeast_component(s: SkewShape) -> SkewShape | None:
    parts = components(s)
    return parts[0] if parts else None


def closing_step(s: SkewShape) -> int:
    """For a connected shape with contents [a, b], the step b + 1 where the paths meet again."""
    contents = s.contents()
    if not contents:
        raise ValueError("Empty shape has no closing step")
    return contents[-1] + 1
