"""
Stacked wiring diagrams of a pair (v, word): crossings, chambers, chamber
labels for both strand systems, neighbouring chambers and spread boundaries.

Crossing c sits at height h_c and swaps the strands in positions h_c and
h_c + 1. The chamber chi_c is the region at height h_c immediately left of
crossing c, so chambers and crossings share the index set 1..l. Regions open
on the right, and the regions below height 1 and above height n - 1, are not
chambers here; they are written None and their minors are 1. Strands are
named by their right endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from lib.perm_core import (
    IndexSet,
    Permutation,
    ReducedWord,
    SubexpressionMask,
    is_unipeak,
    pds,
)


@dataclass(frozen=True)
class Chamber:
    """Labels of chi_c. Left labels use word prefixes, right labels suffixes."""
    index: int
    height: int
    left_v: IndexSet
    left_w: IndexSet
    right_v: IndexSet
    right_w: IndexSet
    frozen: bool


@dataclass(frozen=True)
class Neighbors:
    """Chambers around a crossing; None marks a region that is not a chamber."""
    up: int | None
    down: int | None
    left: int
    right: int | None

    def as_dict(self) -> dict[str, int | None]:
        return {"up": self.up, "down": self.down, "left": self.left, "right": self.right}


@dataclass(frozen=True)
class WiringDiagram:
    v: Permutation
    word: ReducedWord
    mask: SubexpressionMask
    chambers: tuple[Chamber, ...]
    w_suffixes: tuple[Permutation, ...] = field(repr=False)
    v_suffixes: tuple[Permutation, ...] = field(repr=False)

    @property
    def n(self) -> int:
        return self.word.n

    @property
    def w(self) -> Permutation:
        return self.word.product()

    def __len__(self) -> int:
        return len(self.word)

    @property
    def heights(self) -> tuple[int, ...]:
        return self.word.letters

    def height(self, c: int) -> int:
        return self.word[c]

    def chamber(self, c: int) -> Chamber:
        self._check_crossing(c)
        return self.chambers[c - 1]

    def is_hollow(self, c: int) -> bool:
        self._check_crossing(c)
        return self.mask.is_hollow(c)

    @property
    def solid(self) -> tuple[int, ...]:
        return self.mask.solid

    @property
    def hollow(self) -> tuple[int, ...]:
        return self.mask.support

    @property
    def unipeak(self) -> bool:
        return is_unipeak(self.word)

    def _check_crossing(self, c: int):
        if not 1 <= c <= len(self.word):
            raise ValueError(f"Crossing {c} outside 1..{len(self.word)}")

    def w_strand(self, c: int, position: int) -> int:
        """Right endpoint of the w-strand at `position` just before crossing c (c = l+1 is the right edge)."""
        return self.w_suffixes[c - 1](position)

    def v_strand(self, c: int, position: int) -> int:
        return self.v_suffixes[c - 1](position)

    def next_at_height(self, c: int, height: int) -> int | None:
        """First crossing after c at the given height."""
        for x in range(c + 1, len(self.word) + 1):
            if self.word[x] == height:
                return x
        return None

    def previous_at_height(self, c: int, height: int) -> int | None:
        for x in range(c - 1, 0, -1):
            if self.word[x] == height:
                return x
        return None

    def neighbors(self, c: int) -> Neighbors:
        """Chambers above, below, left and right of crossing c."""
        self._check_crossing(c)
        h = self.word[c]
        return Neighbors(
            up=self.next_at_height(c, h + 1) if h + 1 <= self.n - 1 else None,
            down=self.next_at_height(c, h - 1) if h - 1 >= 1 else None,
            left=c,
            right=self.next_at_height(c, h),
        )

    def rising_strand(self, c: int) -> int:
        """Right endpoint of the w-strand entering crossing c from below."""
        return self.w_strand(c, self.word[c])

    def falling_strand(self, c: int) -> int:
        return self.w_strand(c, self.word[c] + 1)

    def right_open(self, height: int) -> int | None:
        """Last crossing at a height; the region right of it is open."""
        return self.previous_at_height(len(self.word) + 1, height)


def build_diagram(v: Permutation, word: ReducedWord, mask: SubexpressionMask | None = None) -> WiringDiagram:
    """
    Build the stacked wiring diagram of v inside a reduced word.

    Args:
        v: Permutation below the product of the word in Bruhat order
        word: Reduced word for w
        mask: Subexpression for v; the positive distinguished one by default

    Returns:
        The diagram with chamber labels for both strand systems
    """
    if v.n != word.n:
        raise ValueError(f"v has size {v.n} but the word lives in S_{word.n}")
    if mask is None:
        mask = pds(v, word)
    elif mask.v != v or mask.word != word:
        raise ValueError("Mask does not belong to the given v and word")

    length = len(word)
    w_prefixes = tuple(word.prefix(c) for c in range(1, length + 2))
    w_suffixes = tuple(word.suffix(c) for c in range(1, length + 2))
    v_prefixes = tuple(mask.prefix(c) for c in range(1, length + 2))
    v_suffixes = tuple(mask.suffix(c) for c in range(1, length + 2))

    w = word.product()
    seen_heights = set()
    chambers = []
    for c in range(1, length + 1):
        h = word[c]
        chamber = Chamber(
            index=c,
            height=h,
            left_v=v_prefixes[c - 1].head(h),
            left_w=w_prefixes[c - 1].head(h),
            right_v=v_suffixes[c - 1].head(h),
            right_w=w_suffixes[c - 1].head(h),
            frozen=h not in seen_heights,
        )
        seen_heights.add(h)
        if v.apply(chamber.right_v) != chamber.left_v or w.apply(chamber.right_w) != chamber.left_w:
            raise RuntimeError(f"Left and right labels of chamber {c} are not related by v and w")
        chambers.append(chamber)

    return WiringDiagram(v, word, mask, tuple(chambers), w_suffixes, v_suffixes)


def chamber_labels(d: WiringDiagram, c: int, side: str = "right") -> tuple[IndexSet, IndexSet]:
    """(v-label, w-label) of chi_c on the given side; the row and column sets of its chamber minor."""
    chamber = d.chamber(c)
    if side == "left":
        return chamber.left_v, chamber.left_w
    if side == "right":
        return chamber.right_v, chamber.right_w
    raise ValueError(f"Unknown side {side!r}, expected 'left' or 'right'")


@dataclass(frozen=True)
class SpreadBoundary:
    left_ends: frozenset[int]
    right_ends: frozenset[int]
    cusps: frozenset[int]
    forbidden_cusps: frozenset[int]


def spread_boundary(d: WiringDiagram, region) -> SpreadBoundary:
    """
    Classify the crossings on the boundary of a union of chambers.

    A crossing is a left end when its left chamber is outside the region and
    its right chamber inside, and a right end in the opposite case. It is a
    cusp when an odd number of its four surrounding chambers lie inside. A
    forbidden cusp is an interior crossing, all four neighbours present, whose
    left, right and down chambers are inside and whose up chamber is outside.
    """
    region = frozenset(region)
    unknown = [c for c in region if not isinstance(c, int) or not 1 <= c <= len(d)]
    if unknown:
        raise ValueError(f"Region references unknown chambers: {sorted(unknown, key=str)}")

    left_ends, right_ends, cusps, forbidden = set(), set(), set(), set()
    for x in range(1, len(d) + 1):
        around = d.neighbors(x)
        chambers = around.as_dict()
        inside = {name: (chamber is not None and chamber in region) for name, chamber in chambers.items()}
        if not inside["left"] and inside["right"]:
            left_ends.add(x)
        if inside["left"] and not inside["right"]:
            right_ends.add(x)
        if sum(inside.values()) % 2 == 1:
            cusps.add(x)
            interior = all(chamber is not None for chamber in chambers.values())
            if interior and inside["left"] and inside["right"] and inside["down"] and not inside["up"]:
                forbidden.add(x)
    return SpreadBoundary(frozenset(left_ends), frozenset(right_ends), frozenset(cusps), frozenset(forbidden))


def truncate_right(d: WiringDiagram) -> WiringDiagram:
    """Drop the last crossing: (v_(l), h_1 ... h_(l-1))."""
    if len(d) == 0:
        raise ValueError("Cannot truncate an empty word")
    word = ReducedWord(d.word.letters[:-1], d.n)
    v = d.mask.prefix(len(d))
    truncated = build_diagram(v, word)
    if truncated.mask.bits != d.mask.bits[:-1]:
        raise RuntimeError(f"Right truncation of {d.word} changed the distinguished subexpression")
    return truncated


def truncate_left(d: WiringDiagram) -> WiringDiagram:
    """Drop the first crossing: (v with s_{h_1} removed when hollow, h_2 ... h_l)."""
    if len(d) == 0:
        raise ValueError("Cannot truncate an empty word")
    word = ReducedWord(d.word.letters[1:], d.n)
    letters = [h for h, bit in zip(word.letters, d.mask.bits[1:]) if bit]
    v = Permutation.from_word(letters, d.n)
    truncated = build_diagram(v, word)
    if truncated.mask.bits != d.mask.bits[1:]:
        raise RuntimeError(f"Left truncation of {d.word} changed the distinguished subexpression")
    return truncated
