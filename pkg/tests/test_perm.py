import itertools

import pytest

from models.errors import CellNotFoundError, InvalidWordError
from models.perm import (
    Permutation,
    apply_word,
    border_cells,
    descents,
    enumerate_reduced_words,
    format_word,
    hook,
    hook_removal_complement,
    inversions,
    is_reduced,
    rothe_diagram,
    symmetric_group,
)

D_35421 = {(1, 1), (1, 2), (2, 1), (2, 2), (2, 4), (3, 1), (3, 2), (4, 1)}


def test_permutation_trims_trailing_fixed_points():
    assert Permutation((1, 2, 4, 3, 5, 6)).oneline == (1, 2, 4, 3)
    assert Permutation((1, 2, 3)) == Permutation.identity()
    assert Permutation((2, 1))(5) == 5


def test_permutation_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation((1, 1, 3))


def test_permutation_str():
    assert str(Permutation((3, 5, 4, 2, 1))) == "35421"
    assert str(Permutation.identity()) == "1"


def test_apply_word_examples():
    assert apply_word(()) == Permutation.identity()
    assert apply_word((3, 1, 4, 3, 5, 4)) == Permutation((2, 1, 5, 6, 4, 3))
    assert apply_word((4, 2, 3, 4, 1, 2, 3, 4)) == Permutation((3, 5, 4, 2, 1))


def test_apply_word_rejects_zero_letter():
    with pytest.raises(InvalidWordError):
        apply_word((1, 0))


def test_is_reduced():
    assert not is_reduced((1, 1))
    assert is_reduced((4, 2, 3, 4, 1, 2, 3, 4))
    assert is_reduced((1, 2, 1))
    assert is_reduced(())


def test_inverse_and_length():
    omega = Permutation((3, 5, 4, 2, 1))
    assert omega.inverse() == Permutation((5, 4, 1, 3, 2))
    assert omega.length == 8
    assert inversions(Permutation((2, 1))) == {(1, 2)}


def test_rothe_diagram_examples(omega_35421):
    assert rothe_diagram(Permutation.identity()) == frozenset()
    assert rothe_diagram(omega_35421) == D_35421
    assert rothe_diagram(Permutation((2, 1, 5, 6, 4, 3))) == {
        (1, 1),
        (3, 3),
        (3, 4),
        (4, 3),
        (4, 4),
        (5, 3),
    }


def test_hook_examples():
    assert hook({(1, 1)}, (1, 1)) == {(1, 1)}
    assert hook(D_35421, (2, 2)) == {(2, 2), (3, 2), (2, 4)}
    assert hook(D_35421, (1, 1)) == {(1, 1), (2, 1), (3, 1), (4, 1), (1, 2)}


def test_hook_outside_diagram():
    with pytest.raises(CellNotFoundError):
        hook(D_35421, (5, 5))


def test_descents_and_border_cells(omega_35421):
    assert descents(Permutation.identity()) == frozenset()
    assert border_cells(Permutation.identity()) == frozenset()
    assert descents(omega_35421) == {2, 3, 4}
    assert border_cells(omega_35421) == {(2, 4), (3, 2), (4, 1)}


def test_enumerate_reduced_words_small():
    assert enumerate_reduced_words(Permutation.identity()) == {()}
    assert enumerate_reduced_words(Permutation((3, 2, 1))) == {(1, 2, 1), (2, 1, 2)}


def test_format_word():
    assert format_word((5, 4, 5)) == "545"
    assert format_word((10, 2)) == "10,2"


@pytest.mark.parametrize("omega", list(symmetric_group(4)), ids=str)
def test_diagram_size_is_length(omega):
    assert len(rothe_diagram(omega)) == omega.length


@pytest.mark.parametrize("omega", list(symmetric_group(4)), ids=str)
def test_reduced_words_multiply_back(omega):
    for word in enumerate_reduced_words(omega):
        assert is_reduced(word)
        assert apply_word(word) == omega


@pytest.mark.parametrize("omega", list(symmetric_group(4)), ids=str)
def test_hooks_and_diagram_cover_the_square(omega):
    n = omega.n
    square = frozenset(itertools.product(range(1, n + 1), repeat=2))
    diagram = rothe_diagram(omega)
    hooks = [hook(square, (i, omega(i))) for i in range(1, n + 1)]
    assert hook_removal_complement(omega) == diagram
    assert all(not h & diagram for h in hooks)
    assert diagram.union(*hooks) == square


def test_hooks_of_the_square_may_overlap():
    square = frozenset(itertools.product((1, 2), repeat=2))
    assert hook(square, (1, 2)) & hook(square, (2, 1)) == {(2, 2)}


@pytest.mark.parametrize("omega", list(symmetric_group(5)), ids=str)
def test_descents_match_border_cells(omega):
    assert len(descents(omega)) == len(border_cells(omega))


def test_reduced_word_count_of_longest_element():
    # 16 reduced words for 4321
    assert len(enumerate_reduced_words(Permutation((4, 3, 2, 1)))) == 16
