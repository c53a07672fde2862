import pytest

from lib.perm_core import Permutation, ReducedWord, SubexpressionMask
from lib.wiring import build_diagram, chamber_labels, spread_boundary, truncate_left, truncate_right


def test_single_crossing_labels(single_crossing):
    d = single_crossing
    assert d.solid == (1,)
    assert chamber_labels(d, 1, "right") == ((1,), (2,))
    assert chamber_labels(d, 1, "left") == ((1,), (1,))
    assert d.chamber(1).frozen
    assert d.neighbors(1).as_dict() == {"up": None, "down": None, "left": 1, "right": None}


def test_worked_example_crossings(worked_example):
    d = worked_example
    assert len(d) == 9
    assert d.hollow == (5, 8)
    assert d.solid == (1, 2, 3, 4, 6, 7, 9)
    assert [ch.index for ch in d.chambers if ch.frozen] == [1, 2, 3, 4]
    assert d.unipeak


def test_worked_example_neighbors(worked_example):
    around = worked_example.neighbors(5)
    assert (around.up, around.down, around.left, around.right) == (None, 6, 5, 9)
    assert worked_example.right_open(4) == 9


def test_top_cell_is_all_hollow(top_cell):
    assert top_cell.solid == ()
    assert top_cell.hollow == (1, 2, 3)
    for ch in top_cell.chambers:
        assert ch.right_v == ch.right_w


def test_strands_of_longest_n3(longest_n3):
    d = longest_n3
    assert d.rising_strand(1) == 2
    assert d.falling_strand(1) == 1
    assert d.neighbors(1).down == 2
    assert d.neighbors(1).right == 3
    assert d.neighbors(3).down is None
    assert [d.w_strand(4, p) for p in (1, 2, 3)] == [1, 2, 3]


def test_labels_relate_by_v_and_w(diagrams_n3):
    for d in diagrams_n3:
        for ch in d.chambers:
            assert len(ch.right_w) == len(ch.left_w) == ch.height
            assert d.w.apply(ch.right_w) == ch.left_w
            assert d.v.apply(ch.right_v) == ch.left_v


def test_bad_crossing_and_side(single_crossing):
    with pytest.raises(ValueError):
        single_crossing.chamber(2)
    with pytest.raises(ValueError):
        chamber_labels(single_crossing, 1, "top")


def test_build_diagram_checks_inputs():
    word = ReducedWord((1,), 2)
    with pytest.raises(ValueError):
        build_diagram(Permutation.identity(3), word)
    other = SubexpressionMask((0,), Permutation.identity(2), word)
    with pytest.raises(ValueError):
        build_diagram(Permutation((2, 1)), word, other)


def test_spread_boundary_single_chamber(longest_n3):
    boundary = spread_boundary(longest_n3, {3})
    assert boundary.left_ends == {1}
    assert boundary.right_ends == {3}
    assert not boundary.forbidden_cusps


def test_spread_boundary_forbidden_cusp(worked_example):
    around = worked_example.neighbors(6)
    assert (around.up, around.right, around.down) == (9, 8, 7)
    boundary = spread_boundary(worked_example, {6, 7, 8})
    assert 6 in boundary.cusps
    assert 6 in boundary.forbidden_cusps


def test_spread_boundary_allowed_cusp(worked_example):
    # only the left chamber outside
    boundary = spread_boundary(worked_example, {7, 8, 9})
    assert 6 in boundary.cusps
    assert 6 not in boundary.forbidden_cusps


def test_forbidden_cusps_need_all_neighbours(longest_n3):
    # crossing 1 sits at the top height, so it has no upper chamber
    assert longest_n3.neighbors(1).up is None
    boundary = spread_boundary(longest_n3, {1, 2, 3})
    assert 1 in boundary.cusps
    assert not boundary.forbidden_cusps


def test_spread_boundary_rejects_unknown_chambers(single_crossing):
    with pytest.raises(ValueError):
        spread_boundary(single_crossing, {2})


def test_truncations_keep_the_mask(worked_example):
    right = truncate_right(worked_example)
    assert right.word.letters == (4, 3, 2, 1, 4, 3, 2, 3)
    assert right.mask.bits == worked_example.mask.bits[:-1]
    left = truncate_left(worked_example)
    assert left.word.letters == (3, 2, 1, 4, 3, 2, 3, 4)
    assert left.mask.bits == worked_example.mask.bits[1:]


def test_truncations_over_n3(diagrams_n3):
    for d in diagrams_n3:
        if len(d):
            assert len(truncate_right(d)) == len(truncate_left(d)) == len(d) - 1


def test_truncating_empty_word():
    empty = build_diagram(Permutation.identity(2), ReducedWord((), 2))
    with pytest.raises(ValueError):
        truncate_right(empty)
