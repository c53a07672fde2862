"""
Symmetric-group primitives: permutations, reduced words, Bruhat order,
unipeak detection, positive distinguished subexpressions and the Gale order.

Conventions:
    A permutation is stored in one-line notation, so `w.one_line[i - 1] == w(i)`.
    Products compose right to left: (u * w)(i) = u(w(i)). Multiplying by s_i on
    the right swaps the entries in positions i and i+1, and multiplying on the
    left swaps the values i and i+1. A word h_1 ... h_l names the product
    s_{h_1} ... s_{h_l}. For a set K, u[k] denotes {u(1), ..., u(k)}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from lib.config import MAX_ENUMERATION_N

# strictly increasing integers in [n]
IndexSet = tuple[int, ...]


def index_set(elems, n: int | None = None) -> IndexSet:
    """Normalize an iterable of integers into a sorted IndexSet."""
    elems = list(elems)
    result = tuple(sorted(set(elems)))
    if len(result) != len(elems):
        raise ValueError(f"Index set has repeated entries: {elems}")
    if result and result[0] < 1:
        raise ValueError(f"Index set entries must be positive: {list(result)}")
    if n is not None and result and result[-1] > n:
        raise ValueError(f"Index set {list(result)} is not contained in [{n}]")
    return result


@dataclass(frozen=True, order=True)
class Permutation:
    """An element of S_n in one-line notation."""
    one_line: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.one_line) != list(range(1, len(self.one_line) + 1)):
            raise ValueError(f"Not a permutation of 1..{len(self.one_line)}: {list(self.one_line)}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Permutation":
        """
        Parse one-line notation such as "3214" or "3,2,1,4".

        A comma-free string is read digit by digit, so it only covers n <= 9.
        If `n` is larger than the parsed length, fixed points are appended.
        """
        text = text.strip()
        if "," in text:
            values = [int(part) for part in text.split(",") if part.strip()]
        else:
            if not text.isdigit():
                raise ValueError(f"Cannot parse permutation: {text!r}")
            values = [int(ch) for ch in text]
        if n is not None:
            if len(values) > n:
                raise ValueError(f"Permutation {text!r} has more than {n} entries")
            values += list(range(len(values) + 1, n + 1))
        return cls(tuple(values))

    @classmethod
    def from_word(cls, letters, n: int) -> "Permutation":
        """Return the product s_{h_1} ... s_{h_l}."""
        perm = cls.identity(n)
        for letter in letters:
            perm = perm.right_mul(letter)
        return perm

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, i: int) -> int:
        return self.one_line[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise ValueError(f"Cannot multiply permutations of sizes {self.n} and {other.n}")
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(str(x) for x in self.one_line)
        return ",".join(str(x) for x in self.one_line)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, value in enumerate(self.one_line, 1):
            inv[value - 1] = i
        return Permutation(tuple(inv))

    def length(self) -> int:
        """Number of inversions."""
        line = self.one_line
        return sum(1 for a in range(self.n) for b in range(a + 1, self.n) if line[a] > line[b])

    def right_mul(self, i: int) -> "Permutation":
        """Return self * s_i (swap positions i and i+1)."""
        _check_generator(i, self.n)
        line = list(self.one_line)
        line[i - 1], line[i] = line[i], line[i - 1]
        return Permutation(tuple(line))

    def left_mul(self, i: int) -> "Permutation":
        """Return s_i * self (swap values i and i+1)."""
        _check_generator(i, self.n)
        swap = {i: i + 1, i + 1: i}
        return Permutation(tuple(swap.get(x, x) for x in self.one_line))

    def apply(self, elems) -> IndexSet:
        """Return the image u(K) of a set K as a sorted IndexSet."""
        return tuple(sorted(self(i) for i in elems))

    def head(self, k: int) -> IndexSet:
        """Return u[k] = {u(1), ..., u(k)}."""
        if not 0 <= k <= self.n:
            raise ValueError(f"Height {k} outside 0..{self.n}")
        return tuple(sorted(self.one_line[:k]))

    def right_descents(self) -> list[int]:
        return [i for i in range(1, self.n) if self(i) > self(i + 1)]


def _check_generator(i: int, n: int):
    if not 1 <= i <= n - 1:
        raise ValueError(f"Generator s_{i} does not exist in S_{n}")


@dataclass(frozen=True)
class ReducedWord:
    """A reduced word h_1 ... h_l for an element of S_n."""
    letters: tuple[int, ...]
    n: int

    def __post_init__(self):
        for letter in self.letters:
            _check_generator(letter, self.n)
        if self.product().length() != len(self.letters):
            raise ValueError(f"Word {list(self.letters)} is not reduced in S_{self.n}")

    @classmethod
    def parse(cls, text: str, n: int) -> "ReducedWord":
        """Parse a comma-separated word such as "1,2,1"; the empty string is the empty word."""
        text = text.strip()
        letters = tuple(int(part) for part in text.split(",") if part.strip()) if text else ()
        return cls(letters, n)

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, c: int) -> int:
        """Return h_c, 1-indexed."""
        if not 1 <= c <= len(self.letters):
            raise ValueError(f"Crossing {c} outside 1..{len(self.letters)}")
        return self.letters[c - 1]

    def __str__(self) -> str:
        return ",".join(str(h) for h in self.letters)

    def product(self) -> Permutation:
        return Permutation.from_word(self.letters, self.n)

    def prefix(self, i: int) -> Permutation:
        """w_(i) = s_{h_1} ... s_{h_(i-1)}, with w_(1) = e."""
        return Permutation.from_word(self.letters[:i - 1], self.n)

    def suffix(self, i: int) -> Permutation:
        """w^(i) = s_{h_l} ... s_{h_i}, a prefix of the reversed word."""
        return Permutation.from_word(reversed(self.letters[i - 1:]), self.n)


@dataclass(frozen=True)
class SubexpressionMask:
    """A 0/1 mask on a reduced word; 1 marks a hollow crossing (in the support)."""
    bits: tuple[int, ...]
    v: Permutation
    word: ReducedWord

    def __post_init__(self):
        if len(self.bits) != len(self.word):
            raise ValueError(f"Mask of length {len(self.bits)} does not fit a word of length {len(self.word)}")
        letters = [h for h, bit in zip(self.word.letters, self.bits) if bit]
        if Permutation.from_word(letters, self.word.n) != self.v:
            raise ValueError(f"Mask {list(self.bits)} does not multiply to {self.v}")
        if len(letters) != self.v.length():
            raise ValueError(f"Mask {list(self.bits)} is not a reduced subexpression for {self.v}")

    @property
    def support(self) -> tuple[int, ...]:
        """Hollow crossings, 1-indexed."""
        return tuple(c for c, bit in enumerate(self.bits, 1) if bit)

    @property
    def solid(self) -> tuple[int, ...]:
        return tuple(c for c, bit in enumerate(self.bits, 1) if not bit)

    def is_hollow(self, c: int) -> bool:
        return bool(self.bits[c - 1])

    def prefix(self, i: int) -> Permutation:
        """v_(i) = s^v_{h_1} ... s^v_{h_(i-1)}."""
        letters = [h for h, bit in zip(self.word.letters[:i - 1], self.bits[:i - 1]) if bit]
        return Permutation.from_word(letters, self.word.n)

    def suffix(self, i: int) -> Permutation:
        """v^(i) = s^v_{h_l} ... s^v_{h_i}."""
        pairs = list(zip(self.word.letters, self.bits))[i - 1:]
        letters = [h for h, bit in reversed(pairs) if bit]
        return Permutation.from_word(letters, self.word.n)


def gale_leq(I, J) -> bool:
    """Elementwise comparison of two equal-size sets."""
    I, J = tuple(sorted(I)), tuple(sorted(J))
    if len(I) != len(J):
        raise ValueError(f"Gale order needs equal sizes, got {list(I)} and {list(J)}")
    return all(i <= j for i, j in zip(I, J))


def bruhat_leq(v: Permutation, w: Permutation) -> bool:
    """Tableau criterion: v[k] <= w[k] in the Gale order for every k."""
    if v.n != w.n:
        raise ValueError(f"Cannot compare permutations of sizes {v.n} and {w.n}")
    return all(gale_leq(v.head(k), w.head(k)) for k in range(1, v.n))


def bruhat_leq_subword(v: Permutation, w: Permutation) -> bool:
    """Subword criterion: some reduced subword of a reduced word of w multiplies to v."""
    if v.n != w.n:
        raise ValueError(f"Cannot compare permutations of sizes {v.n} and {w.n}")
    return bool(reduced_subexpressions(v, a_reduced_word(w)))


def a_reduced_word(w: Permutation) -> ReducedWord:
    """One reduced word of w, found by peeling off the first right descent."""
    letters = []
    current = w
    while current.length() > 0:
        i = current.right_descents()[0]
        letters.append(i)
        current = current.right_mul(i)
    return ReducedWord(tuple(reversed(letters)), w.n)


def reduced_words(w: Permutation) -> list[ReducedWord]:
    """All reduced words of w, sorted lexicographically."""
    if w.n > MAX_ENUMERATION_N:
        raise ValueError(f"Reduced word enumeration is limited to n <= {MAX_ENUMERATION_N}, got n = {w.n}")
    return [ReducedWord(letters, w.n) for letters in sorted(_reduced_letters(w.one_line))]


@lru_cache(maxsize=None)
def _reduced_letters(one_line: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    w = Permutation(one_line)
    if w.length() == 0:
        return frozenset({()})
    words = set()
    for i in w.right_descents():
        for letters in _reduced_letters(w.right_mul(i).one_line):
            words.add(letters + (i,))
    return frozenset(words)


def strand_heights(letters, n: int) -> list[list[int]]:
    """
    Height of every strand in every time slot of the wiring diagram of a word.

    Returns `heights[t][p - 1]`: the height after t crossings of the strand
    that enters at height p on the left.
    """
    position = list(range(1, n + 1))
    occupant = list(range(1, n + 1))  # occupant[h - 1] = strand at height h
    heights = [position[:]]
    for h in letters:
        lower, upper = occupant[h - 1], occupant[h]
        occupant[h - 1], occupant[h] = upper, lower
        position[lower - 1] += 1
        position[upper - 1] -= 1
        heights.append(position[:])
    return heights


def is_unipeak(word: ReducedWord) -> bool:
    """True iff no strand of the wiring diagram travels down and later up."""
    heights = strand_heights(word.letters, word.n)
    for strand in range(word.n):
        went_down = False
        for before, after in zip(heights, heights[1:]):
            step = after[strand] - before[strand]
            if step < 0:
                went_down = True
            elif step > 0 and went_down:
                return False
    return True


def unipeak_words(w: Permutation) -> list[ReducedWord]:
    return [word for word in reduced_words(w) if is_unipeak(word)]


def pds(v: Permutation, word: ReducedWord) -> SubexpressionMask:
    """
    Positive distinguished subexpression for v in the word, computed greedily
    from right to left: v_(i) is the smaller of v_(i+1) and v_(i+1) s_{h_i}.
    """
    if not bruhat_leq(v, word.product()):
        raise ValueError(f"{v} is not below {word.product()} in Bruhat order")
    bits = [0] * len(word)
    current = v
    for i in range(len(word), 0, -1):
        shorter = current.right_mul(word[i])
        if shorter.length() < current.length():
            bits[i - 1] = 1
            current = shorter
    if current.length() != 0:
        raise RuntimeError(f"Greedy subexpression for {v} in {list(word.letters)} did not reach e")
    return SubexpressionMask(tuple(bits), v, word)


def reduced_subexpressions(v: Permutation, word: ReducedWord) -> list[tuple[int, ...]]:
    """Supports (1-indexed, sorted) of all reduced subexpressions for v in the word."""
    supports = []
    for positions in combinations(range(1, len(word) + 1), v.length()):
        if Permutation.from_word([word[c] for c in positions], word.n) == v:
            supports.append(positions)
    return supports


def all_permutations(n: int) -> list[Permutation]:
    """S_n sorted by length, then one-line notation."""
    perms = [Permutation(p) for p in permutations(range(1, n + 1))]
    return sorted(perms, key=lambda p: (p.length(), p.one_line))


def bruhat_interval_below(w: Permutation) -> list[Permutation]:
    return [v for v in all_permutations(w.n) if bruhat_leq(v, w)]
