import pytest
import sympy as sp

from lib.exact_minors import (
    IdentityResult,
    check_desnanot_jacobi,
    check_hollow_relation,
    cofactor_det,
    eval_minor,
    gale_pairs,
    hollow_relation_indices,
    random_matrix,
    random_unitriangular,
    random_upper_triangular,
    shape_translates,
    verify_component_factorization,
    verify_translation,
)
from lib.perm_core import Permutation, ReducedWord
from lib.shapes import MinorIndex, canonical_key, skew_shape
from lib.wiring import build_diagram


def test_minors_of_identity():
    eye = sp.eye(4)
    assert eval_minor(eye, MinorIndex((1, 3), (1, 3))) == 1
    assert eval_minor(eye, MinorIndex((1, 3), (1, 4))) == 0
    assert eval_minor(eye, MinorIndex((), ())) == 1


def test_minor_index_out_of_range():
    with pytest.raises(ValueError):
        eval_minor(sp.eye(2), MinorIndex((3,), (1,)))


def test_bareiss_matches_cofactor_expansion():
    m = random_matrix(4, seed=7)
    assert eval_minor(m, MinorIndex((1, 2, 3, 4), (1, 2, 3, 4))) == cofactor_det(m)
    assert eval_minor(m, MinorIndex((1, 3), (2, 4))) == cofactor_det(m.extract([0, 2], [1, 3]))


def test_random_matrices_are_seeded_and_shaped():
    x = random_unitriangular(5, seed=3)
    assert x == random_unitriangular(5, seed=3)
    assert all(x[i, i] == 1 for i in range(5))
    assert all(x[i, j] == 0 for i in range(5) for j in range(i))
    b = random_upper_triangular(5, seed=3)
    assert all(b[i, i] != 0 for i in range(5))
    with pytest.raises(ValueError):
        random_unitriangular(0)


def test_gale_pairs_small():
    assert list(gale_pairs(2)) == [((), ()), ((1,), (1,)), ((1,), (2,)), ((2,), (2,)), ((1, 2), (1, 2))]


def test_figure_minor_factors():
    x = random_unitriangular(7, seed=11)
    assert eval_minor(x, MinorIndex((1, 3, 4), (2, 3, 7))) == x[0, 1] * x[3, 6]


@pytest.mark.parametrize("I, J, n", [
    ((1, 3, 4), (2, 3, 7), 7),
    ((1, 2), (1, 2), 3),
    ((1, 2), (3, 4), 4),
])
def test_component_factorization(I, J, n):
    assert verify_component_factorization(I, J, n, trials=10, seed=1)
    assert verify_translation(I, J, n, trials=10, seed=1)


def test_factorization_sweep_n4():
    for I, J in gale_pairs(4):
        assert verify_component_factorization(I, J, 4, trials=3, seed=5).ok


def test_shape_translates_share_keys():
    s = skew_shape((3,), (4,), 5)
    moved = shape_translates(s)
    assert len(moved) > 1
    assert {canonical_key(t) for t in moved} == {canonical_key(s)}


def test_hollow_indices_single_crossing():
    s1 = Permutation((2, 1))
    minors = hollow_relation_indices(s1, s1, 1)
    assert minors.up == MinorIndex((1, 2), (1, 2))
    assert minors.down == MinorIndex((), ())
    assert minors.right == MinorIndex((2,), (2,))
    assert minors.left == MinorIndex((1,), (1,))
    assert minors.cross_a == MinorIndex((2,), (1,))
    assert minors.cross_b == MinorIndex((1,), (2,))
    assert check_desnanot_jacobi(s1, s1, 1, trials=20)
    assert check_hollow_relation(s1, s1, 1, trials=20)


def test_hollow_indices_need_matching_descents():
    with pytest.raises(ValueError):
        hollow_relation_indices(Permutation.identity(2), Permutation((2, 1)), 1)


@pytest.mark.parametrize("i", [1, 2])
def test_desnanot_jacobi_longest_n3(i):
    w0 = Permutation((3, 2, 1))
    assert check_desnanot_jacobi(w0, w0, i, trials=20, seed=2)
    assert check_hollow_relation(w0, w0, i, trials=20, seed=2)


def test_failed_identity_keeps_first_counterexample():
    result = IdentityResult("example", trials=2)
    result.fail(sp.eye(2), lhs="1", rhs="0")
    result.fail(sp.zeros(2, 2), lhs="2")
    assert not result
    assert result.counterexample == {"matrix": [[1, 0], [0, 1]], "lhs": "1", "rhs": "0"}


def test_hollow_relation_right_labels_n4():
    d = build_diagram(Permutation.parse("1243"), ReducedWord((3, 2, 3), 4))
    assert d.hollow
    for c in d.hollow:
        i = d.height(c)
        u, x = d.mask.suffix(c), d.word.suffix(c)
        minors = hollow_relation_indices(u, x, i)
        m = random_upper_triangular(4, seed=3)
        assert eval_minor(m, minors.cross_a) == 0
        assert check_hollow_relation(u, x, i, trials=20, seed=c)
