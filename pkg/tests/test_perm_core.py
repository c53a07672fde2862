import pytest

from lib.perm_core import (
    Permutation,
    ReducedWord,
    SubexpressionMask,
    a_reduced_word,
    all_permutations,
    bruhat_interval_below,
    bruhat_leq,
    bruhat_leq_subword,
    gale_leq,
    index_set,
    is_unipeak,
    pds,
    reduced_subexpressions,
    reduced_words,
    unipeak_words,
)


def perm(text):
    return Permutation.parse(text)


def test_parse_pads_with_fixed_points():
    assert Permutation.parse("21", 4) == Permutation((2, 1, 3, 4))
    assert Permutation.parse("3,2,1") == perm("321")


@pytest.mark.parametrize("bad", [(1, 1), (0, 1), (2, 3)])
def test_rejects_non_permutations(bad):
    with pytest.raises(ValueError):
        Permutation(bad)


def test_index_set_rejects_duplicates_and_range():
    assert index_set([3, 1]) == (1, 3)
    with pytest.raises(ValueError):
        index_set([1, 1])
    with pytest.raises(ValueError):
        index_set([4], 3)


def test_from_word_and_composition():
    assert Permutation.from_word([1, 2, 1], 4) == perm("3214")
    u, w = perm("231"), perm("312")
    assert (u * w).one_line == tuple(u(w(i)) for i in range(1, 4))
    assert u * u.inverse() == Permutation.identity(3)


def test_length_and_multiplication_sides():
    u = perm("3214")
    assert u.length() == 3
    assert u.right_mul(1) == perm("2314")  # swaps positions 1 and 2
    assert u.left_mul(1) == perm("3124")  # swaps values 1 and 2
    assert u.head(2) == (2, 3)


@pytest.mark.parametrize("v, w, expected", [
    ("1234", "4321", True),
    ("4321", "4321", True),
    ("3214", "4321", True),
    ("213", "132", False),
    ("321", "312", False),
])
def test_bruhat_leq(v, w, expected):
    assert bruhat_leq(perm(v), perm(w)) is expected


def test_bruhat_criteria_agree_on_s3():
    for v in all_permutations(3):
        for w in all_permutations(3):
            assert bruhat_leq(v, w) == bruhat_leq_subword(v, w)


def test_reduced_word_validation():
    with pytest.raises(ValueError):
        ReducedWord((1, 1), 2)
    with pytest.raises(ValueError):
        ReducedWord((3,), 3)
    assert ReducedWord.parse("", 3).letters == ()
    assert ReducedWord.parse("2,1,2", 3)[2] == 1


def test_prefix_and_suffix():
    word = ReducedWord((1, 2, 1, 3, 2, 1), 4)
    assert word.prefix(1) == Permutation.identity(4)
    assert word.prefix(7) == word.product()
    assert word.suffix(1) == word.product().inverse()
    assert word.suffix(6) == Permutation.from_word([1], 4)


def test_reduced_words():
    assert [w.letters for w in reduced_words(Permutation.from_word([2], 3))] == [(2,)]
    assert len(reduced_words(perm("321"))) == 2
    longest = reduced_words(perm("4321"))
    assert (1, 2, 1, 3, 2, 1) in [w.letters for w in longest]
    assert len(longest) == 16
    assert a_reduced_word(perm("4321")).product() == perm("4321")


@pytest.mark.parametrize("letters, n, expected", [
    ((2, 1, 3, 2, 1), 4, False),
    ((4, 3, 2, 1, 4, 3, 2, 3, 4), 5, True),
    ((1,), 2, True),
    ((1, 2, 1), 3, False),
    ((2, 1, 2), 3, True),
])
def test_is_unipeak(letters, n, expected):
    assert is_unipeak(ReducedWord(letters, n)) is expected


def test_unipeak_words_of_longest_n3():
    assert unipeak_words(perm("321")) == [ReducedWord((2, 1, 2), 3)]


def test_every_permutation_has_a_unipeak_word():
    for w in all_permutations(4):
        assert unipeak_words(w)


@pytest.mark.parametrize("v, letters, n, support", [
    ("3214", (1, 2, 1, 3, 2, 1), 4, (3, 5, 6)),
    ("12534", (4, 3, 2, 1, 4, 3, 2, 3, 4), 5, (5, 8)),
    ("123", (2, 1, 2), 3, ()),
])
def test_pds_support(v, letters, n, support):
    mask = pds(perm(v), ReducedWord(letters, n))
    assert mask.support == support
    assert mask.prefix(len(letters) + 1) == perm(v)
    assert mask.suffix(1) == perm(v).inverse()


def test_pds_is_lexicographically_largest_and_sized():
    for w in all_permutations(3):
        for word in reduced_words(w):
            for v in bruhat_interval_below(w):
                mask = pds(v, word)
                assert mask.support == max(reduced_subexpressions(v, word))
                assert len(mask.solid) == w.length() - v.length()


def test_pds_requires_bruhat_order():
    with pytest.raises(ValueError):
        pds(perm("321"), ReducedWord((1,), 3))


def test_mask_must_multiply_to_v():
    with pytest.raises(ValueError):
        SubexpressionMask((1, 0), perm("213"), ReducedWord((2, 1), 3))


@pytest.mark.parametrize("I, J, expected", [
    ((1, 3, 4), (2, 3, 7), True),
    ((2, 3), (2, 3), True),
    ((2, 3), (1, 4), False),
])
def test_gale_leq(I, J, expected):
    assert gale_leq(I, J) is expected


def test_gale_leq_needs_equal_sizes():
    with pytest.raises(ValueError):
        gale_leq((1,), (1, 2))
