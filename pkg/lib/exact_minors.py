"""
Exact minor evaluation on concrete integer matrices, seeded random matrices,
and the polynomial identities checked by random evaluation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

import sympy as sp

from lib.config import DEFAULT_SEED, DEFAULT_TRIALS, ENTRY_RANGE
from lib.perm_core import Permutation, gale_leq
from lib.shapes import MinorIndex, SkewShape, canonical_key, components, skew_shape, translate


@dataclass
class IdentityResult:
    """Outcome of checking an identity on random matrices."""
    name: str
    trials: int
    passed: int = 0
    counterexample: dict | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def __bool__(self) -> bool:
        return self.ok

    def fail(self, matrix: sp.Matrix, **details):
        if self.counterexample is None:
            self.counterexample = {"matrix": [[int(x) for x in row] for row in matrix.tolist()], **details}


def eval_minor(m: sp.Matrix, idx: MinorIndex) -> sp.Rational:
    """
    Exact determinant of the submatrix on idx.rows and idx.cols.

    Args:
        m: Square sympy matrix with rational entries
        idx: Row and column sets, 1-indexed

    Returns:
        The minor as a sympy number; the empty minor is 1
    """
    n = m.rows
    for k in idx.rows + idx.cols:
        if not 1 <= k <= n:
            raise ValueError(f"Index {k} of {idx} outside 1..{n}")
    if not idx.rows:
        return sp.Integer(1)
    sub = m.extract([r - 1 for r in idx.rows], [c - 1 for c in idx.cols])
    return sub.det(method="bareiss")


def cofactor_det(m: sp.Matrix) -> sp.Rational:
    """Laplace expansion along the first row; an independent oracle for small sizes."""
    size = m.rows
    if size == 0:
        return sp.Integer(1)
    if size == 1:
        return m[0, 0]
    total = sp.Integer(0)
    for j in range(size):
        if m[0, j] == 0:
            continue
        minor = m.extract(list(range(1, size)), [c for c in range(size) if c != j])
        total += (-1) ** j * m[0, j] * cofactor_det(minor)
    return total


def _entry(rng: random.Random) -> sp.Integer:
    return sp.Integer(rng.randint(*ENTRY_RANGE))


def _nonzero_entry(rng: random.Random) -> sp.Integer:
    value = 0
    while value == 0:
        value = rng.randint(*ENTRY_RANGE)
    return sp.Integer(value)


def random_unitriangular(n: int, seed: int = DEFAULT_SEED, rng: random.Random | None = None) -> sp.Matrix:
    """Upper unitriangular matrix with strictly-upper entries drawn from ENTRY_RANGE."""
    if n < 1:
        raise ValueError(f"Matrix size must be positive, got {n}")
    rng = rng or random.Random(seed)
    return sp.Matrix(n, n, lambda i, j: 1 if i == j else (_entry(rng) if i < j else 0))


def random_upper_triangular(n: int, seed: int = DEFAULT_SEED, rng: random.Random | None = None) -> sp.Matrix:
    """Upper triangular matrix with a nonzero diagonal."""
    if n < 1:
        raise ValueError(f"Matrix size must be positive, got {n}")
    rng = rng or random.Random(seed)
    return sp.Matrix(n, n, lambda i, j: _nonzero_entry(rng) if i == j else (_entry(rng) if i < j else 0))


def random_matrix(n: int, seed: int = DEFAULT_SEED, rng: random.Random | None = None) -> sp.Matrix:
    if n < 1:
        raise ValueError(f"Matrix size must be positive, got {n}")
    rng = rng or random.Random(seed)
    return sp.Matrix(n, n, lambda i, j: _entry(rng))


def gale_pairs(n: int):
    """All pairs I <= J of equal-size subsets of [n], sizes 0..n."""
    for size in range(n + 1):
        subsets = list(combinations(range(1, n + 1), size))
        for I in subsets:
            for J in subsets:
                if gale_leq(I, J):
                    yield I, J


def verify_component_factorization(I, J, n: int, trials: int = DEFAULT_TRIALS,
                                   seed: int = DEFAULT_SEED) -> IdentityResult:
    """
    Check that the minor of (I, J) is the product of the minors of the
    canonical keys of its components, on random unitriangular matrices.
    """
    shape = skew_shape(I, J, n)
    keys = [canonical_key(part) for part in components(shape)]
    result = IdentityResult(f"factorization {shape.index}", trials)
    rng = random.Random(seed)
    for _ in range(trials):
        x = random_unitriangular(n, rng=rng)
        lhs = eval_minor(x, shape.index)
        rhs = sp.Integer(1)
        for key in keys:
            rhs *= eval_minor(x, key)
        if lhs != rhs:
            result.fail(x, lhs=str(lhs), rhs=str(rhs), keys=[str(k) for k in keys])
            break
        result.passed += 1
    return result


def shape_translates(s: SkewShape) -> list[SkewShape]:
    """Every anti-diagonal translate of a connected shape reachable inside the grid."""
    a, b = s.contents()[0], s.contents()[-1]
    result = []
    for depth in range(a):
        result.append(translate(s, depth))
        if b + 2 <= s.n:
            result.append(translate(s, depth, tail=(s.n,)))
    return result


def verify_translation(I, J, n: int, trials: int = DEFAULT_TRIALS,
                       seed: int = DEFAULT_SEED) -> IdentityResult:
    """Each component minor is unchanged by anti-diagonal translation of its shape."""
    shape = skew_shape(I, J, n)
    result = IdentityResult(f"translation {shape.index}", trials)
    pairs = []
    for part in components(shape):
        key = canonical_key(part)
        for moved in shape_translates(part):
            if canonical_key(moved) != key:
                result.counterexample = {"shape": str(part.index), "translate": str(moved.index),
                                         "reason": "canonical keys differ"}
                return result
            pairs.append((part.index, moved.index))
    rng = random.Random(seed)
    for _ in range(trials):
        x = random_unitriangular(n, rng=rng)
        for original, moved in pairs:
            if eval_minor(x, original) != eval_minor(x, moved):
                result.fail(x, shape=str(original), translate=str(moved))
                return result
        result.passed += 1
    return result


@dataclass(frozen=True)
class HollowMinors:
    """The six minors around a descent i shared by u and x."""
    up: MinorIndex
    down: MinorIndex
    left: MinorIndex
    right: MinorIndex
    cross_a: MinorIndex
    cross_b: MinorIndex


def hollow_relation_indices(u: Permutation, x: Permutation, i: int) -> HollowMinors:
    """
    Minor indices around position i for permutations u and x sharing a descent at i.

    up is (u[i+1], x[i+1]), down is (u[i-1], x[i-1]), right is (u[i], x[i]) and
    left is (u s_i[i], x s_i[i]). cross_a is (u[i], x s_i[i]) and cross_b is
    (u s_i[i], x[i]). For right labels at a hollow crossing cross_a vanishes
    on upper-triangular matrices.
    """
    if u.n != x.n:
        raise ValueError(f"Permutations of sizes {u.n} and {x.n}")
    if (u(i) > u(i + 1)) != (x(i) > x(i + 1)):
        raise ValueError(f"Position {i} is a descent of exactly one of {u} and {x}")
    us, xs = u.right_mul(i), x.right_mul(i)
    return HollowMinors(
        up=MinorIndex(u.head(i + 1), x.head(i + 1)),
        down=MinorIndex(u.head(i - 1), x.head(i - 1)),
        left=MinorIndex(us.head(i), xs.head(i)),
        right=MinorIndex(u.head(i), x.head(i)),
        cross_a=MinorIndex(u.head(i), xs.head(i)),
        cross_b=MinorIndex(us.head(i), x.head(i)),
    )


def _values(m: sp.Matrix, minors: HollowMinors) -> dict[str, sp.Rational]:
    return {name: eval_minor(m, getattr(minors, name))
            for name in ("up", "down", "left", "right", "cross_a", "cross_b")}


def check_desnanot_jacobi(u: Permutation, x: Permutation, i: int, trials: int = DEFAULT_TRIALS,
                          seed: int = DEFAULT_SEED) -> IdentityResult:
    """up * down = left * right - cross_a * cross_b on random matrices."""
    minors = hollow_relation_indices(u, x, i)
    result = IdentityResult(f"desnanot-jacobi u={u} x={x} i={i}", trials)
    rng = random.Random(seed)
    for _ in range(trials):
        m = random_matrix(u.n, rng=rng)
        val = _values(m, minors)
        if val["up"] * val["down"] != val["left"] * val["right"] - val["cross_a"] * val["cross_b"]:
            result.fail(m, **{k: str(v) for k, v in val.items()})
            break
        result.passed += 1
    return result


def check_hollow_relation(u: Permutation, x: Permutation, i: int, trials: int = DEFAULT_TRIALS,
                          seed: int = DEFAULT_SEED) -> IdentityResult:
    """
    On random upper-triangular matrices cross_a vanishes, so
    up * down = left * right. Holds for right chamber labels only.
    """
    minors = hollow_relation_indices(u, x, i)
    result = IdentityResult(f"hollow relation u={u} x={x} i={i}", trials)
    rng = random.Random(seed)
    for _ in range(trials):
        m = random_upper_triangular(u.n, rng=rng)
        val = _values(m, minors)
        if val["cross_a"] != 0 or val["up"] * val["down"] != val["left"] * val["right"]:
            result.fail(m, **{k: str(v) for k, v in val.items()})
            break
        result.passed += 1
    return result
