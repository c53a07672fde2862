"""
Ingermanson's seed for a unipeak wiring diagram.

The appearance matrix M records, for every chamber c and solid crossing d,
whether the variable A_d divides the left chamber minor of chi_c; it is
computed from pivot jumps. P inverts the solid rows of M, and A_d is the
Laurent monomial prod_c Delta_c^{P[d, c]} in left chamber minors. The quiver
is M^T B M for the half-arrow quiver B of the diagram.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

import sympy as sp

from lib.config import WIRING_ORIENTATION
from lib.perm_core import IndexSet, Permutation, gale_leq
from lib.prep_modules import Quiver
from lib.shapes import MinorIndex
from lib.wiring import WiringDiagram, spread_boundary

ORIENTATIONS = tuple(product((False, True), repeat=3))


@dataclass(frozen=True)
class LaurentMonomial:
    """Sparse exponent map; zero exponents are dropped."""
    exponents: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, exponents: dict) -> "LaurentMonomial":
        return cls(tuple(sorted((key, e) for key, e in exponents.items() if e)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.exponents)

    def __mul__(self, other: "LaurentMonomial") -> "LaurentMonomial":
        merged = self.as_dict()
        for key, e in other.exponents:
            merged[key] = merged.get(key, 0) + e
        return LaurentMonomial.from_dict(merged)

    def __truediv__(self, other: "LaurentMonomial") -> "LaurentMonomial":
        return self * other.inverse()

    def inverse(self) -> "LaurentMonomial":
        return LaurentMonomial(tuple((key, -e) for key, e in self.exponents))

    def is_one(self) -> bool:
        return not self.exponents

    def format(self, symbol: str) -> str:
        if not self.exponents:
            return "1"
        parts = []
        for key, e in self.exponents:
            parts.append(f"{symbol}{key}" if e == 1 else f"{symbol}{key}^{e}")
        return " ".join(parts)


@dataclass(frozen=True)
class LabeledMatrix:
    """Integer matrix with row and column labels."""
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    matrix: sp.Matrix

    def __getitem__(self, key: tuple[int, int]) -> int:
        r, c = key
        return int(self.matrix[self.rows.index(r), self.cols.index(c)])

    def restrict(self, rows) -> "LabeledMatrix":
        rows = tuple(rows)
        picked = [self.rows.index(r) for r in rows]
        if not picked or not self.cols:
            return LabeledMatrix(rows, self.cols, sp.zeros(len(rows), len(self.cols)))
        return LabeledMatrix(rows, self.cols, self.matrix.extract(picked, list(range(len(self.cols)))))

    def to_lists(self) -> list[list[int]]:
        return [[self[r, c] for c in self.cols] for r in self.rows]


def piv(J, u: Permutation) -> IndexSet:
    """
    Gale minimum of { u(I) : I <= J }.

    Raises RuntimeError when the minimum is not unique.
    """
    J = tuple(sorted(J))
    if J and (J[0] < 1 or J[-1] > u.n):
        raise ValueError(f"{list(J)} is not a subset of [{u.n}]")
    candidates = {u.apply(I) for I in combinations(range(1, u.n + 1), len(J)) if gale_leq(I, J)}
    minima = [X for X in candidates if all(gale_leq(X, Y) for Y in candidates)]
    if len(minima) != 1:
        raise RuntimeError(f"Pivot of {list(J)} under {u} is not a unique Gale minimum")
    return minima[0]


def pivot_window(d: WiringDiagram, c: int, x: int) -> IndexSet:
    """L(c, x): heights just before crossing x of the w-strands below chi_c."""
    letters = d.word.letters[c - 1:x - 1]
    return Permutation.from_word(reversed(letters), d.n).head(d.height(c))


def appearance_entry(d: WiringDiagram, c: int, x: int) -> int:
    """m_{c,x} for a solid crossing x."""
    if c > x:
        return 0
    window = pivot_window(d, c, x)
    u = d.mask.prefix(x)
    before, after = piv(window, u), piv(window, u.right_mul(d.height(x)))
    if before == after:
        return 0
    if not gale_leq(before, after):
        raise RuntimeError(f"Pivot of {list(window)} drops at crossing {x}")
    return 1


def appearance_matrix_M(d: WiringDiagram) -> LabeledMatrix:
    """Rows are all crossings, columns the solid crossings."""
    rows = tuple(range(1, len(d) + 1))
    cols = d.solid
    matrix = sp.zeros(len(rows), len(cols))
    for i, c in enumerate(rows):
        for j, x in enumerate(cols):
            matrix[i, j] = appearance_entry(d, c, x)
    return LabeledMatrix(rows, cols, matrix)


def monomial_matrix_P(M: LabeledMatrix) -> LabeledMatrix:
    """Integer inverse of the solid-row submatrix of M, indexed P[d, c]."""
    square = M.restrict(M.cols)
    size = len(M.cols)
    for i in range(size):
        for j in range(size):
            entry = square.matrix[i, j]
            if (i == j and entry != 1) or (i > j and entry != 0) or entry not in (0, 1):
                raise ValueError("Solid rows of the appearance matrix are not upper unitriangular 0/1")
    inverse = square.matrix.inv() if size else sp.zeros(0, 0)
    return LabeledMatrix(M.cols, M.cols, inverse)


@dataclass(frozen=True)
class PiPath:
    """The path from a solid crossing to the right edge along rising strands."""
    crossing: int
    segments: tuple[tuple[int, int], ...]  # (next crossing, height); next crossing l+1 is the right edge
    height: int
    drops: tuple[int, ...]


def path_pi(d: WiringDiagram, c: int) -> PiPath:
    """
    Follow the rising strand out of crossing c to the right edge.

    Segments of w-strands in a time slot are deleted when the v-strand at the
    same height belongs to the v-strands below chi_c. At a crossing entered
    from below the path rises. At a crossing entered from above it stays at
    its height while the segment there survives and falls otherwise.
    """
    if d.is_hollow(c):
        raise ValueError(f"Crossing {c} is hollow")
    below = set(d.chamber(c).right_v)

    def present(slot: int, height: int) -> bool:
        return d.v_strand(slot, height) not in below

    p = d.height(c) + 1
    if not present(c + 1, p):
        raise RuntimeError(f"Rising segment after crossing {c} is deleted")
    segments = [(c + 1, p)]
    drops = []
    for t in range(c + 1, len(d) + 1):
        h = d.height(t)
        if h == p:
            p += 1
            if not present(t + 1, p):
                raise RuntimeError(f"Path from crossing {c} rises into a deleted segment at crossing {t}")
        elif h == p - 1 and not present(t + 1, p):
            p -= 1
            drops.append(t)
        segments.append((t + 1, p))
    return PiPath(c, tuple(segments), p, tuple(drops))


@dataclass(frozen=True)
class IngVariable:
    label: int
    frozen: bool
    monomial: LaurentMonomial  # in left chamber minors
    minor: MinorIndex
    spread: frozenset[int]
    endpoint: int


def ing_variables(d: WiringDiagram, M: LabeledMatrix | None = None,
                  P: LabeledMatrix | None = None) -> list[IngVariable]:
    """
    The cluster variables A_d for the solid crossings d.

    Args:
        d: Diagram of a unipeak word
        M: Appearance matrix, computed when omitted
        P: Inverse of its solid rows, computed when omitted

    Returns:
        One variable per solid crossing, in crossing order
    """
    M = M if M is not None else appearance_matrix_M(d)
    P = P if P is not None else monomial_matrix_P(M)
    variables = []
    for x in d.solid:
        spread = frozenset(c for c in M.rows if M[c, x] == 1)
        monomial = LaurentMonomial.from_dict({c: P[x, c] for c in M.cols})
        pi = path_pi(d, x)
        chamber = d.chamber(x)
        minor = MinorIndex(
            tuple(r for r in chamber.left_v if r in d.v.head(pi.height)),
            tuple(s for s in chamber.left_w if s in d.w.head(pi.height)),
        )
        variables.append(IngVariable(
            label=x,
            frozen=any(d.chamber(c).frozen for c in spread),
            monomial=monomial,
            minor=minor,
            spread=spread,
            endpoint=pi.height,
        ))
    return variables


def _half_arrows(orientation) -> list[tuple[str, str, int]]:
    horizontal, upper, lower = orientation
    arrows = [("left", "right", 2) if horizontal else ("right", "left", 2)]
    arrows += [("right", "up", 1), ("up", "left", 1)] if upper else [("up", "right", 1), ("left", "up", 1)]
    arrows += [("right", "down", 1), ("down", "left", 1)] if lower else [("down", "right", 1), ("left", "down", 1)]
    return arrows


def wiring_quiver(d: WiringDiagram, orientation=WIRING_ORIENTATION) -> LabeledMatrix:
    """
    Signed adjacency B over chambers: B[i, j] arrows i -> j, minus those j -> i.

    Each crossing contributes a full arrow between its left and right chambers
    and half arrows between those and the chambers above and below, oriented
    by `orientation` (horizontal, upper pair, lower pair flips). Arrows between
    frozen chambers are deleted before halving.
    """
    halves = {}
    for x in range(1, len(d) + 1):
        around = d.neighbors(x).as_dict()
        for source, target, weight in _half_arrows(orientation):
            i, j = around[source], around[target]
            if i is None or j is None:
                continue
            halves[(i, j)] = halves.get((i, j), 0) + weight

    labels = tuple(range(1, len(d) + 1))
    B = sp.zeros(len(labels), len(labels))
    for i in labels:
        for j in labels:
            if i == j or (d.chamber(i).frozen and d.chamber(j).frozen):
                continue
            net = halves.get((i, j), 0) - halves.get((j, i), 0)
            if net % 2:
                raise RuntimeError(f"Half arrows between chambers {i} and {j} do not pair up")
            B[i - 1, j - 1] = net // 2
    return LabeledMatrix(labels, labels, B)


def exchange_matrix(M: LabeledMatrix, B: LabeledMatrix) -> LabeledMatrix:
    """M^T B M over the solid crossings."""
    if not M.cols:
        return LabeledMatrix((), (), sp.zeros(0, 0))
    return LabeledMatrix(M.cols, M.cols, M.matrix.T * B.matrix * M.matrix)


def ing_quiver(M: LabeledMatrix, B: LabeledMatrix, frozen=()) -> Quiver:
    """Arrows A_c -> A_d counted by (M^T B M)[c, d]; arrows between frozen variables deleted."""
    Q = exchange_matrix(M, B)
    counts = {}
    for c in Q.rows:
        for x in Q.cols:
            if c < x:
                if Q[c, x] != -Q[x, c]:
                    raise RuntimeError(f"Exchange matrix is not skew-symmetric at ({c}, {x})")
                counts[(c, x)] = Q[c, x]
    return Quiver.from_counts(Q.rows, frozen, counts)


@dataclass(frozen=True)
class IngSeed:
    diagram: WiringDiagram
    M: LabeledMatrix
    P: LabeledMatrix
    B: LabeledMatrix
    variables: tuple[IngVariable, ...]
    quiver: Quiver

    def variable(self, label: int) -> IngVariable:
        for var in self.variables:
            if var.label == label:
                return var
        raise ValueError(f"No variable labelled {label}")

    @property
    def frozen(self) -> frozenset[int]:
        return frozenset(var.label for var in self.variables if var.frozen)


def build_ing_seed(d: WiringDiagram, orientation=WIRING_ORIENTATION) -> IngSeed:
    M = appearance_matrix_M(d)
    P = monomial_matrix_P(M)
    variables = ing_variables(d, M, P)
    B = wiring_quiver(d, orientation)
    frozen = [var.label for var in variables if var.frozen]
    return IngSeed(d, M, P, B, tuple(variables), ing_quiver(M, B, frozen))


def crossing_monomial(d: WiringDiagram, c: int) -> LaurentMonomial:
    """t_c = (up * down) / (left * right) in left chamber minors; non-chambers contribute 1."""
    around = d.neighbors(c)
    exponents = {}
    for chamber, sign in ((around.up, 1), (around.down, 1), (around.left, -1), (around.right, -1)):
        if chamber is not None:
            exponents[chamber] = exponents.get(chamber, 0) + sign
    return LaurentMonomial.from_dict(exponents)


def in_cluster_variables(M: LabeledMatrix, monomial: LaurentMonomial) -> LaurentMonomial:
    """Rewrite a monomial in chamber minors using Delta_c = prod_d A_d^{m_{c,d}}."""
    exponents = {}
    for c, e in monomial.exponents:
        for x in M.cols:
            if M[c, x]:
                exponents[x] = exponents.get(x, 0) + e * M[c, x]
    return LaurentMonomial.from_dict(exponents)


def chamber_monomials(seed: IngSeed) -> dict[int, LaurentMonomial]:
    """chi_c -> its left chamber minor as a monomial in the A_d."""
    return {c: in_cluster_variables(seed.M, LaurentMonomial.from_dict({c: 1})) for c in seed.M.rows}


def exchange_ratio(seed: IngSeed, c: int) -> LaurentMonomial:
    """
    y-hat of the mutable variable A_c, in the A_d.

    Computed from the column of M^T B M and again as the product of t_x over
    the left ends x of the spread of A_c, divided by t_c. Raises RuntimeError
    when the two disagree.
    """
    var = seed.variable(c)
    if var.frozen:
        raise ValueError(f"Variable {c} is frozen")
    Q = exchange_matrix(seed.M, seed.B)
    from_quiver = LaurentMonomial.from_dict({j: Q[j, c] for j in Q.rows})

    ends = spread_boundary(seed.diagram, var.spread).left_ends
    chambers = crossing_monomial(seed.diagram, c).inverse()
    for x in sorted(ends):
        chambers = chambers * crossing_monomial(seed.diagram, x)
    from_crossings = in_cluster_variables(seed.M, chambers)

    if from_quiver != from_crossings:
        raise RuntimeError(
            f"Exchange ratio of A_{c} disagrees: quiver gives {from_quiver.format('A')}, "
            f"crossings give {from_crossings.format('A')}"
        )
    return from_quiver
