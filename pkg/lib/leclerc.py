"""
Leclerc's seed: chamber modules from right chamber labels, the labelled
variables B_d, the factor-appearance matrix and the quiver of the
endomorphism algebra of the cluster-tilting module.
"""

from __future__ import annotations

import random
from collections.abc import Callable
from dataclasses import dataclass

import sympy as sp

from lib.config import DEFAULT_SEED
from lib.ingermanson import LabeledMatrix
from lib.perm_core import IndexSet
from lib.prep_modules import Morphism, PModule, Quiver, gabriel_quiver, hom_space, module_from_shape, random_morphism
from lib.shapes import MinorIndex, SkewShape, canonical_key, closing_step, components, skew_shape
from lib.wiring import WiringDiagram


@dataclass(frozen=True)
class ChamberModule:
    index: int
    shape: SkewShape
    components: tuple[SkewShape, ...]
    keys: tuple[MinorIndex, ...]


def _chamber_module(index: int, rows: IndexSet, cols: IndexSet, n: int) -> ChamberModule:
    try:
        shape = skew_shape(rows, cols, n)
    except ValueError as e:
        raise RuntimeError(f"Right labels of chamber {index} do not give a skew shape: {e}") from e
    parts = tuple(components(shape))
    return ChamberModule(index, shape, parts, tuple(canonical_key(part) for part in parts))


def chamber_modules(d: WiringDiagram) -> dict[int, ChamberModule]:
    """chi_c -> the skew shape of its right labels, with components and their keys."""
    return {
        chamber.index: _chamber_module(chamber.index, chamber.right_v, chamber.right_w, d.n)
        for chamber in d.chambers
    }


@dataclass(frozen=True)
class LecVariable:
    label: int
    frozen: bool
    minor: MinorIndex  # truncated at the closing step q
    key: MinorIndex
    bound: int  # q
    shape: SkewShape
    module: PModule


def lec_variables(d: WiringDiagram, table: dict[int, ChamberModule] | None = None) -> list[LecVariable]:
    """
    B_d for each solid crossing d: the northeast-most component of chi_d.

    The minor is the right labels of chi_d cut down to [q], where q is the
    step closing that component; its shape must be the component itself.
    """
    table = table if table is not None else chamber_modules(d)
    frozen_keys = {key for c, entry in table.items() if d.chamber(c).frozen for key in entry.keys}
    variables = []
    for x in d.solid:
        entry = table[x]
        if not entry.components:
            raise RuntimeError(f"Chamber {x} of a solid crossing has an empty shape")
        top = entry.components[0]
        q = closing_step(top)
        chamber = d.chamber(x)
        minor = MinorIndex(chamber.right_v, chamber.right_w).truncate(q)
        if skew_shape(minor.rows, minor.cols, d.n).boxes != top.boxes:
            raise RuntimeError(f"Truncating chamber {x} at step {q} does not give its top component")
        key = entry.keys[0]
        variables.append(LecVariable(
            label=x,
            frozen=key in frozen_keys,
            minor=minor,
            key=key,
            bound=q,
            shape=top,
            module=module_from_shape(top, label=f"M{x}"),
        ))
    return variables


def lec_appearance_matrix(table: dict[int, ChamberModule], variables: list[LecVariable]) -> LabeledMatrix:
    """Entry (c, d) is 1 when B_d is a component of chi_c."""
    rows = tuple(sorted(table))
    cols = tuple(var.label for var in variables)
    by_key = {var.key: var.label for var in variables}
    matrix = sp.zeros(len(rows), len(cols))
    for i, c in enumerate(rows):
        for key in table[c].keys:
            if key not in by_key:
                raise RuntimeError(f"Component {key} of chamber {c} matches no variable")
            matrix[i, cols.index(by_key[key])] = 1
    return LabeledMatrix(rows, cols, matrix)


def lec_quiver(variables: list[LecVariable]) -> Quiver:
    """Gabriel quiver of End(sum of M_d), labelled by solid crossings."""
    keys = [var.key for var in variables]
    if len(set(keys)) != len(keys):
        raise RuntimeError("Two solid crossings carry the same variable")
    return gabriel_quiver([(var.label, var.module, var.frozen) for var in variables])


@dataclass(frozen=True)
class LecSeed:
    diagram: WiringDiagram
    table: dict[int, ChamberModule]
    variables: tuple[LecVariable, ...]
    appearance: LabeledMatrix
    quiver: Quiver

    def variable(self, label: int) -> LecVariable:
        for var in self.variables:
            if var.label == label:
                return var
        raise ValueError(f"No variable labelled {label}")

    @property
    def frozen(self) -> frozenset[int]:
        return frozenset(var.label for var in self.variables if var.frozen)


def build_lec_seed(d: WiringDiagram) -> LecSeed:
    table = chamber_modules(d)
    variables = lec_variables(d, table)
    return LecSeed(d, table, tuple(variables), lec_appearance_matrix(table, variables), lec_quiver(variables))


@dataclass(frozen=True)
class StripCheck:
    crossing: int
    case: str
    ok: bool
    detail: str = ""


def _labels_at(d: WiringDiagram, slot: int, height: int) -> tuple[IndexSet, IndexSet]:
    """Right labels of the region at `height` just before crossing `slot` (l+1 is the right edge)."""
    return d.v_suffixes[slot - 1].head(height), d.w_suffixes[slot - 1].head(height)


def _neighbor_slot(d: WiringDiagram, c: int, height: int) -> int:
    if height in (0, d.n):
        return len(d) + 1
    x = d.next_at_height(c, height)
    return x if x is not None else len(d) + 1


def _zero_morphism(source: PModule, target: PModule) -> Morphism:
    return Morphism(source, target, tuple(sp.zeros(t, s) for s, t in zip(source.dims, target.dims)))


def _witness(source: PModule, target: PModule, test: Callable[[Morphism], bool], rng: random.Random,
             attempts: int = 5) -> bool:
    """Whether the zero map, a basis map or a random combination of Hom(source, target) passes test."""
    basis = hom_space(source, target)
    candidates = [_zero_morphism(source, target)] + basis
    candidates += [random_morphism(basis, rng) for _ in range(attempts)] if basis else []
    return any(test(f) for f in candidates)


def _strip(n: int, low: int, high: int) -> tuple[int, ...]:
    """Indicator of contents low..high on [n-1]."""
    return tuple(1 if low <= k <= high else 0 for k in range(1, n))


def strip_maps(d: WiringDiagram, i: int, seed: int = DEFAULT_SEED) -> list[StripCheck]:
    """
    Compare chi_i with its right, upper and lower neighbours at a solid crossing i.

    With a, a' the falling and rising w-strands at i and b, b' the v-strands
    just above and below it: the right neighbour has J with a' replaced by a
    and maps injectively into chi_i; the upper neighbour has I + b and J + a
    and receives a surjection from chi_i; the lower neighbour has I - b' and
    J - a' and receives a map from chi_i whose image drops the strip of chi_i
    from content b' up.
    """
    if d.is_hollow(i):
        raise ValueError(f"Crossing {i} is hollow")
    rng = random.Random(seed + i)
    n, h = d.n, d.height(i)
    I, J = d.chamber(i).right_v, d.chamber(i).right_w
    a_rise, a_fall = d.rising_strand(i), d.falling_strand(i)
    b_above, b_below = d.v_strand(i, h + 1), d.v_strand(i, h)
    here = module_from_shape(skew_shape(I, J, n))
    checks = []

    right_I, right_J = _labels_at(d, _neighbor_slot(d, i, h), h)
    expected_J = tuple(sorted(set(J) - {a_rise} | {a_fall}))
    ok = right_I == I and right_J == expected_J and a_rise > a_fall
    if ok:
        right = module_from_shape(skew_shape(right_I, right_J, n))
        growth = tuple(x - y for x, y in zip(here.dims, right.dims))
        ok = growth == _strip(n, a_fall, a_rise - 1) and _witness(right, here, Morphism.is_injective, rng)
    checks.append(StripCheck(i, "right", ok, f"a={a_fall} a'={a_rise}"))

    up_I, up_J = _labels_at(d, _neighbor_slot(d, i, h + 1), h + 1)
    ok = (up_I == tuple(sorted(set(I) | {b_above})) and up_J == tuple(sorted(set(J) | {a_fall}))
          and b_above > a_fall)
    if ok:
        up = module_from_shape(skew_shape(up_I, up_J, n))
        loss = tuple(x - y for x, y in zip(here.dims, up.dims))
        ok = loss == _strip(n, a_fall, b_above - 1) and _witness(here, up, Morphism.is_surjective, rng)
    checks.append(StripCheck(i, "up", ok, f"a={a_fall} b={b_above}"))

    down_I, down_J = _labels_at(d, _neighbor_slot(d, i, h - 1), h - 1)
    ok = down_I == tuple(x for x in I if x != b_below) and down_J == tuple(x for x in J if x != a_rise)
    if ok:
        down = module_from_shape(skew_shape(down_I, down_J, n))
        change = tuple(x - y for x, y in zip(down.dims, here.dims))
        ok = change == tuple((1 if k >= a_rise else 0) - (1 if k >= b_below else 0) for k in range(1, n))
        # the image drops the strip of chi_i from content b' up
        image = tuple(max(dim - (1 if k >= b_below else 0), 0) for k, dim in enumerate(here.dims, 1))
        ok = ok and _witness(here, down, lambda f: f.image_dims() == image, rng)
    checks.append(StripCheck(i, "down", ok, f"a'={a_rise} b'={b_below}"))
    return checks
