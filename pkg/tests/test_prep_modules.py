import random

import pytest
import sympy as sp

from lib.exact_minors import gale_pairs
from lib.prep_modules import (
    Morphism,
    Quiver,
    count_image_shapes,
    endomorphism_radical,
    gabriel_quiver,
    hom_space,
    module_from_shape,
    quotient_shapes,
    random_morphism,
    simple_module,
    submodule_shapes,
    top_socle,
)
from lib.shapes import components, skew_shape

HORIZONTAL_STRIP = frozenset({(1, 2), (1, 3), (1, 4)})  # contents 6, 5, 4 in n = 7
VERTICAL_STRIP = frozenset({(1, 3), (2, 3)})  # contents 1, 2 in n = 3
INJECTIVE_AT_2 = frozenset({(1, 3), (1, 4), (2, 3), (2, 4)})  # n = 4


@pytest.mark.parametrize("k", [1, 2, 3])
def test_simple_modules(k):
    s = simple_module(k, 4)
    assert s.dims == tuple(1 if j == k else 0 for j in range(1, 4))
    assert top_socle(s) == ([k], [k])
    assert len(hom_space(s, s)) == 1
    for j in range(1, 4):
        if j != k:
            assert hom_space(s, simple_module(j, 4)) == []


def test_figure_shape_dims():
    m = module_from_shape(skew_shape((1, 3, 4), (2, 3, 7), 7))
    assert m.dims == (1, 0, 0, 1, 1, 1)
    assert not m.is_connected()


def test_injective_rectangle():
    m = module_from_shape(INJECTIVE_AT_2, 4)
    assert m.dims == (1, 2, 1)
    assert m.is_connected()
    assert top_socle(m)[1] == [2]
    assert len(hom_space(m, m)) == 2
    assert len(endomorphism_radical(m)) == 1


def test_horizontal_strip_top_and_socle():
    m = module_from_shape(HORIZONTAL_STRIP, 7)
    assert top_socle(m) == ([6], [4])
    assert endomorphism_radical(m) == []
    assert len(hom_space(simple_module(4, 7), m)) == 1
    assert hom_space(m, simple_module(4, 7)) == []
    assert len(hom_space(m, simple_module(6, 7))) == 1


def test_box_outside_grid():
    with pytest.raises(ValueError):
        module_from_shape(frozenset({(1, 1)}), 3)
    with pytest.raises(ValueError):
        module_from_shape(frozenset({(1, 2)}))


def test_hom_space_needs_same_algebra():
    with pytest.raises(ValueError):
        hom_space(simple_module(1, 3), simple_module(1, 4))


def test_morphisms_commute_with_arrows():
    target = module_from_shape(INJECTIVE_AT_2, 4)
    source = simple_module(2, 4)
    for f in hom_space(source, target):
        for k, alpha in source.alpha.items():
            assert f.maps[k] * alpha == target.alpha[k] * f.maps[k - 1]
    f = random_morphism(hom_space(source, target), random.Random(1))
    assert f.is_injective()
    assert not f.is_surjective()


def test_identity_morphism():
    m = module_from_shape(VERTICAL_STRIP, 3)
    identity = Morphism(m, m, tuple(sp.eye(d) for d in m.dims))
    assert identity.compose(identity).maps == identity.maps
    assert identity.is_injective() and identity.is_surjective()
    assert identity.trace() == 2
    assert not identity.is_nilpotent()


def test_sub_and_quotient_shapes():
    subs = submodule_shapes(HORIZONTAL_STRIP)
    quotients = quotient_shapes(HORIZONTAL_STRIP)
    assert frozenset({(1, 4)}) in subs
    assert frozenset({(1, 2)}) in quotients
    assert len(subs) == len(quotients) == 3


def _strip_modules(n):
    result = []
    for I, J in gale_pairs(n):
        s = skew_shape(I, J, n)
        if len(components(s)) == 1 and max(s.content_profile()) == 1:
            result.append(module_from_shape(s))
    return result


def test_hom_dimension_matches_image_shapes():
    modules = _strip_modules(4)
    for m in modules:
        for n in modules:
            assert len(hom_space(m, n)) == count_image_shapes(m, n)


def test_gabriel_quiver_small_cases():
    s1, s2 = simple_module(1, 3), simple_module(2, 3)
    assert gabriel_quiver([(1, s1, False)]).arrows == ()
    assert gabriel_quiver([(1, s1, False), (2, s2, False)]).arrows == ()
    strip = module_from_shape(VERTICAL_STRIP, 3)
    quiver = gabriel_quiver([(1, s2, False), (2, strip, False)])
    assert quiver.arrows == ((1, 2, 1),)


def test_gabriel_quiver_rejects_bad_summands():
    s1 = simple_module(1, 3)
    with pytest.raises(ValueError):
        gabriel_quiver([(1, s1, False), (2, simple_module(1, 3), False)])
    split = module_from_shape(frozenset({(1, 4), (1, 2)}), 4)
    with pytest.raises(ValueError):
        gabriel_quiver([(1, split, False)])


def test_quiver_from_counts():
    q = Quiver.from_counts((1, 2, 3), {1, 2}, {(1, 2): 1, (3, 1): -2, (2, 3): 1})
    assert q.arrows == ((1, 3, 2), (2, 3, 1))
    assert q.count(1, 3) == 2
    assert q.mutable() == (3,)
    assert q.to_networkx().number_of_edges() == 3
    assert q.defects() == []


def test_quiver_defects():
    q = Quiver.from_counts((1, 2), (), {(1, 2): 1, (2, 1): 1, (1, 1): 1})
    problems = q.defects()
    assert "loop at 1" in problems
    assert "2-cycle between 1 and 2" in problems
