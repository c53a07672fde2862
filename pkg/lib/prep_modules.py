"""
Skew-shape modules over the preprojective algebra of type A_{n-1}.

The module of a skew shape has one basis vector per box, placed at the vertex
given by the box content. The arrow alpha_k (vertex k to k+1) moves a box one
row down, and alpha*_k (vertex k+1 to k) moves it one column right; a move that
leaves the shape is zero. Hom spaces are exact nullspaces over the rationals.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx
import sympy as sp

from lib.config import MORPHISM_ARROW_DIRECTION
from lib.shapes import SkewShape, content, normalized_boxes

MAX_ORACLE_BOXES = 16  # image-shape enumeration is exponential in the box count


def _matrix(rows: int, cols: int, entry) -> sp.Matrix:
    if rows == 0 or cols == 0:
        return sp.zeros(rows, cols)
    return sp.Matrix(rows, cols, entry)


@dataclass(frozen=True)
class PModule:
    """Matrix model of a skew-shape module."""
    n: int
    boxes: frozenset[tuple[int, int]]
    label: str = ""
    basis: dict = field(init=False, repr=False, compare=False)
    alpha: dict = field(init=False, repr=False, compare=False)
    alpha_star: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for box in self.boxes:
            if not 1 <= content(box, self.n) <= self.n - 1:
                raise ValueError(f"Box {box} has content outside 1..{self.n - 1}")
        basis = {k: sorted(b for b in self.boxes if content(b, self.n) == k) for k in range(1, self.n)}
        alpha, alpha_star = {}, {}
        for k in range(1, self.n - 1):
            source, target = basis[k], basis[k + 1]
            alpha[k] = _matrix(len(target), len(source),
                           lambda r, c: 1 if target[r] == (source[c][0] + 1, source[c][1]) else 0)
            alpha_star[k] = _matrix(len(source), len(target),
                                lambda r, c: 1 if source[r] == (target[c][0], target[c][1] + 1) else 0)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "alpha_star", alpha_star)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(self.basis[k]) for k in range(1, self.n))

    def dim(self) -> int:
        return len(self.boxes)

    def is_connected(self) -> bool:
        graph = nx.Graph()
        graph.add_nodes_from(self.boxes)
        graph.add_edges_from((b, (b[0] + 1, b[1])) for b in self.boxes if (b[0] + 1, b[1]) in self.boxes)
        graph.add_edges_from((b, (b[0], b[1] + 1)) for b in self.boxes if (b[0], b[1] + 1) in self.boxes)
        return bool(self.boxes) and nx.is_connected(graph)

    def check_relations(self) -> bool:
        """alpha_{k-1} alpha*_{k-1} = alpha*_k alpha_k at every vertex k."""
        for k in range(1, self.n):
            size = len(self.basis[k])
            through_below = self.alpha[k - 1] * self.alpha_star[k - 1] if k - 1 in self.alpha else sp.zeros(size, size)
            through_above = self.alpha_star[k] * self.alpha[k] if k in self.alpha else sp.zeros(size, size)
            if through_below != through_above:
                return False
        return True


def module_from_shape(s: SkewShape | frozenset, n: int | None = None, label: str = "") -> PModule:
    """Build the module of a skew shape, or of a raw box set inside the n x n grid."""
    if isinstance(s, SkewShape):
        n = s.n if n is None else n
        boxes = s.boxes
    else:
        if n is None:
            raise ValueError("A raw box set needs the grid size n")
        boxes = frozenset(s)
    module = PModule(n, boxes, label)
    if not module.check_relations():
        raise RuntimeError(f"Preprojective relations fail for module {label or sorted(boxes)}")
    return module


def simple_module(k: int, n: int) -> PModule:
    """S(k): the single box of content k in row 1."""
    return module_from_shape(frozenset({(1, n + 1 - k)}), n, label=f"S({k})")


@dataclass(frozen=True)
class Morphism:
    """A module map given by one matrix per vertex."""
    source: PModule
    target: PModule
    maps: tuple[sp.Matrix, ...]

    def compose(self, first: "Morphism") -> "Morphism":
        """Return self o first."""
        return Morphism(first.source, self.target, tuple(g * f for g, f in zip(self.maps, first.maps)))

    def vector(self) -> list:
        return [x for m in self.maps for x in m]

    def image_dims(self) -> tuple[int, ...]:
        return tuple(m.rank() for m in self.maps)

    def is_injective(self) -> bool:
        return self.image_dims() == self.source.dims

    def is_surjective(self) -> bool:
        return self.image_dims() == self.target.dims

    def trace(self):
        return sum((m.trace() for m in self.maps if m.rows), sp.Integer(0))

    def is_nilpotent(self) -> bool:
        power = self
        for _ in range(max(self.source.dim(), 1)):
            power = power.compose(self)
        return all(m.is_zero_matrix for m in power.maps)


def _combine(elements: list[Morphism], coefficients) -> Morphism:
    first = elements[0]
    maps = []
    for k in range(len(first.maps)):
        total = sp.zeros(first.maps[k].rows, first.maps[k].cols)
        for coefficient, element in zip(coefficients, elements):
            total += coefficient * element.maps[k]
        maps.append(total)
    return Morphism(first.source, first.target, tuple(maps))


def hom_space(M: PModule, N: PModule) -> list[Morphism]:
    """
    Basis of Hom(M, N).

    Args:
        M: Source module
        N: Target module

    Returns:
        Morphisms whose vertex matrices commute with every arrow
    """
    if M.n != N.n:
        raise ValueError(f"Modules over different algebras: n = {M.n} and n = {N.n}")
    n = M.n
    dM, dN = M.dims, N.dims
    offsets, total = {}, 0
    for k in range(1, n):
        offsets[k] = total
        total += dN[k - 1] * dM[k - 1]
    if total == 0:
        return []

    def var(k, r, c):
        return offsets[k] + r * dM[k - 1] + c

    rows = []
    for k in range(1, n - 1):
        # f_{k+1} alpha^M_k = alpha^N_k f_k
        A, B = M.alpha[k], N.alpha[k]
        for r in range(dN[k]):
            for c in range(dM[k - 1]):
                row = [0] * total
                for s in range(dM[k]):
                    if A[s, c]:
                        row[var(k + 1, r, s)] += A[s, c]
                for t in range(dN[k - 1]):
                    if B[r, t]:
                        row[var(k, t, c)] -= B[r, t]
                rows.append(row)
        # f_k alpha*^M_k = alpha*^N_k f_{k+1}
        A, B = M.alpha_star[k], N.alpha_star[k]
        for r in range(dN[k - 1]):
            for c in range(dM[k]):
                row = [0] * total
                for s in range(dM[k - 1]):
                    if A[s, c]:
                        row[var(k, r, s)] += A[s, c]
                for t in range(dN[k]):
                    if B[r, t]:
                        row[var(k + 1, t, c)] -= B[r, t]
                rows.append(row)

    rows = [row for row in rows if any(row)]
    if rows:
        kernel = sp.Matrix(rows).nullspace()
    else:
        kernel = [sp.Matrix([1 if i == j else 0 for i in range(total)]) for j in range(total)]

    basis = []
    for vec in kernel:
        maps = []
        for k in range(1, n):
            maps.append(_matrix(dN[k - 1], dM[k - 1], lambda r, c: vec[var(k, r, c)]))
        basis.append(Morphism(M, N, tuple(maps)))
    return basis


def random_morphism(basis: list[Morphism], rng: random.Random) -> Morphism:
    """A seeded random combination of a Hom-space basis."""
    return _combine(basis, [sp.Integer(rng.randint(1, 9)) for _ in basis])


def top_socle(M: PModule) -> tuple[list[int], list[int]]:
    """Contents of the northwest corners (top) and southeast corners (socle)."""
    top, socle = [], []
    for r, c in M.boxes:
        if (r - 1, c) not in M.boxes and (r, c - 1) not in M.boxes:
            top.append(content((r, c), M.n))
        if (r + 1, c) not in M.boxes and (r, c + 1) not in M.boxes:
            socle.append(content((r, c), M.n))
    return sorted(top), sorted(socle)


@dataclass(frozen=True)
class Quiver:
    """Ice quiver with positive arrow counts; arrows are (source, target, count)."""
    vertices: tuple[int, ...]
    frozen: frozenset[int]
    arrows: tuple[tuple[int, int, int], ...]

    @classmethod
    def from_counts(cls, vertices, frozen, counts: dict, delete_frozen: bool = True) -> "Quiver":
        """
        Build a quiver from signed counts; counts[(i, j)] < 0 means arrows j -> i.
        Opposite arrows are kept, not cancelled. Arrows between two frozen
        vertices are deleted.
        """
        vertices = tuple(sorted(vertices))
        frozen = frozenset(frozen)
        net = {}
        for (i, j), count in counts.items():
            if count < 0:
                i, j, count = j, i, -count
            if count:
                net[(i, j)] = net.get((i, j), 0) + count
        if delete_frozen:
            net = {(i, j): k for (i, j), k in net.items() if not (i in frozen and j in frozen)}
        arrows = tuple(sorted((i, j, k) for (i, j), k in net.items() if k))
        return cls(vertices, frozen, arrows)

    def count(self, i: int, j: int) -> int:
        for source, target, k in self.arrows:
            if (source, target) == (i, j):
                return k
        return 0

    def mutable(self) -> tuple[int, ...]:
        return tuple(v for v in self.vertices if v not in self.frozen)

    def to_networkx(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        for v in self.vertices:
            graph.add_node(v, frozen=v in self.frozen)
        for source, target, k in self.arrows:
            for _ in range(k):
                graph.add_edge(source, target)
        return graph

    def defects(self) -> list[str]:
        """Loops at mutable vertices and 2-cycles among mutable vertices."""
        problems = []
        graph = self.to_networkx()
        for v in self.mutable():
            if graph.has_edge(v, v):
                problems.append(f"loop at {v}")
        for source, target, _ in self.arrows:
            if source < target and source not in self.frozen and target not in self.frozen:
                if graph.has_edge(target, source):
                    problems.append(f"2-cycle between {source} and {target}")
        return problems

    def relabel(self, mapping: dict) -> "Quiver":
        return Quiver(
            tuple(sorted(mapping[v] for v in self.vertices)),
            frozenset(mapping[v] for v in self.frozen),
            tuple(sorted((mapping[i], mapping[j], k) for i, j, k in self.arrows)),
        )


def _span_rank(elements: list[Morphism]) -> int:
    if not elements:
        return 0
    vectors = [e.vector() for e in elements]
    if not vectors[0]:
        return 0
    return sp.Matrix(vectors).rank()


def endomorphism_radical(M: PModule) -> list[Morphism]:
    """
    Basis of rad End(M), the kernel of f -> trace(f) / dim M.

    Raises RuntimeError unless End(M) is local.
    """
    basis = hom_space(M, M)
    traces = [f.trace() for f in basis]
    pivot = next((i for i, t in enumerate(traces) if t != 0), None)
    identity = Morphism(M, M, tuple(sp.eye(d) for d in M.dims))
    if pivot is None or _span_rank(basis + [identity]) != len(basis):
        raise RuntimeError(f"Identity of {M.label or 'module'} is not in its computed endomorphism space")
    radical = []
    for i, f in enumerate(basis):
        if i == pivot:
            continue
        coefficient = traces[i] / traces[pivot]
        radical.append(_combine([f, basis[pivot]], [sp.Integer(1), -coefficient]))
    probes = radical + ([_combine(radical, [sp.Integer(1)] * len(radical))] if radical else [])
    if not all(f.is_nilpotent() for f in probes):
        raise RuntimeError(f"End({M.label or 'module'}) is not local")
    return radical


def gabriel_quiver(summands: list[tuple[int, PModule, bool]]) -> Quiver:
    """
    Gabriel quiver of the endomorphism algebra of a direct sum of indecomposables.

    Args:
        summands: (label, module, frozen) triples, pairwise non-isomorphic

    Returns:
        Quiver with dim rad(M_i, M_j) - dim rad^2(M_i, M_j) arrows i -> j,
        with arrows between frozen labels deleted
    """
    labels = [label for label, _, _ in summands]
    modules = {label: module for label, module, _ in summands}
    frozen = {label for label, _, is_frozen in summands if is_frozen}

    shapes_seen = {}
    for label, module in modules.items():
        if not module.is_connected():
            raise ValueError(f"Summand {label} is not indecomposable")
        key = (module.n, normalized_boxes(module.boxes))
        if key in shapes_seen:
            raise ValueError(f"Summands {shapes_seen[key]} and {label} are isomorphic")
        shapes_seen[key] = label

    radical = {}
    for i in labels:
        for j in labels:
            radical[(i, j)] = endomorphism_radical(modules[i]) if i == j else hom_space(modules[i], modules[j])

    counts = {}
    for i in labels:
        for j in labels:
            squares = [g.compose(f) for k in labels for f in radical[(i, k)] for g in radical[(k, j)]]
            count = len(radical[(i, j)]) - _span_rank(squares)
            if count:
                counts[(i, j)] = count
    if MORPHISM_ARROW_DIRECTION == "target_to_source":
        counts = {(j, i): k for (i, j), k in counts.items()}
    return Quiver.from_counts(labels, frozen, counts)


def submodule_shapes(boxes) -> list[frozenset]:
    """Nonempty box subsets closed under moving down and moving right."""
    return [s for s in _subsets(boxes) if all(
        ((r + 1, c) not in boxes or (r + 1, c) in s) and ((r, c + 1) not in boxes or (r, c + 1) in s)
        for r, c in s)]


def quotient_shapes(boxes) -> list[frozenset]:
    """Nonempty box subsets closed under moving up and moving left."""
    return [s for s in _subsets(boxes) if all(
        ((r - 1, c) not in boxes or (r - 1, c) in s) and ((r, c - 1) not in boxes or (r, c - 1) in s)
        for r, c in s)]


def _subsets(boxes) -> list[frozenset]:
    boxes = sorted(boxes)
    if len(boxes) > MAX_ORACLE_BOXES:
        raise ValueError(f"Image-shape enumeration is limited to {MAX_ORACLE_BOXES} boxes, got {len(boxes)}")
    return [frozenset(chosen) for size in range(1, len(boxes) + 1) for chosen in combinations(boxes, size)]


def count_image_shapes(M: PModule, N: PModule) -> int:
    """Connected shapes that are a quotient of M and, up to translation, a submodule of N."""
    targets = {normalized_boxes(s) for s in submodule_shapes(N.boxes) if module_from_shape(s, N.n).is_connected()}
    return sum(
        1 for s in quotient_shapes(M.boxes)
        if module_from_shape(s, M.n).is_connected() and normalized_boxes(s) in targets
    )
