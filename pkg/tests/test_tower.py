import itertools

import pytest

from models.errors import CellNotFoundError, NotACornerError
from models.perm import Permutation, descents, enumerate_reduced_words, is_reduced, symmetric_group
from models.tableau import slide_word
from models.tower import (
    NoFlight,
    Path,
    Placed,
    Terminated,
    TowerDiagram,
    corners,
    flight,
    flight_number,
    natural_word,
    permutation_of,
    remove_corner,
    slide,
    tower_diagram,
)

SHAPE = TowerDiagram((0, 1, 4, 2, 1))


def test_heights_trim_trailing_zeros():
    assert TowerDiagram((0, 1, 0, 0)).heights == (0, 1)
    assert TowerDiagram((0, 1, 4, 2, 1, 0, 3)).size == 11


def test_cell_membership():
    assert (3, 3) in SHAPE
    assert (3, 4) not in SHAPE
    assert (1, 0) not in SHAPE


def test_slide_into_empty():
    assert slide(TowerDiagram(), 5) == Placed((5, 0))


def test_slide_terminates_on_occupied_base():
    assert slide(TowerDiagram((1,)), 1) == Terminated()


def test_slide_zigzag_over_tower():
    assert slide(TowerDiagram((0, 0, 2)), 3) == Placed((4, 0))


def test_slide_trace_of_example_word():
    shape = TowerDiagram()
    placed = []
    for letter in (5, 4, 5, 3, 4, 5, 6, 2):
        result = slide(shape, letter)
        assert isinstance(result, Placed)
        placed.append(result.cell)
        shape = shape.with_cell(result.cell)
    assert placed == [(5, 0), (4, 0), (4, 1), (3, 0), (3, 1), (3, 2), (3, 3), (2, 0)]
    assert shape == SHAPE


def test_flight_alone_on_diagonal():
    assert flight(TowerDiagram((0, 1)), (2, 0)) == Path(((2, 0),), 2)


def test_flight_through_two_zigzags():
    shape = TowerDiagram((0, 4, 2, 1))
    assert flight(shape, (4, 0)) == Path(((2, 0), (2, 1), (3, 0), (3, 1), (4, 0)), 2)


def test_flight_number_of_top_cell():
    assert flight_number(SHAPE, (3, 3)) == 6


def test_flight_blocked_by_corner_point():
    assert flight(TowerDiagram((1, 1)), (2, 0)) == NoFlight()
    assert flight_number(TowerDiagram((1, 1)), (2, 0)) is None


def test_flight_outside_diagram():
    with pytest.raises(CellNotFoundError):
        flight(SHAPE, (1, 0))


def test_corners():
    assert corners(TowerDiagram()) == frozenset()
    assert corners(TowerDiagram((1,))) == {((1, 0), 1)}
    assert corners(SHAPE) == {((2, 0), 2), ((3, 3), 6), ((4, 1), 4)}


def test_corner_flight_numbers_are_descents_of_example():
    omega = permutation_of(SHAPE)
    assert omega == Permutation((1, 6, 2, 5, 4, 7, 3))
    assert {f for _, f in corners(SHAPE)} == descents(omega)


def test_remove_corner():
    assert remove_corner(TowerDiagram((1,)), (1, 0)) == TowerDiagram()
    assert remove_corner(SHAPE, (2, 0)) == TowerDiagram((0, 0, 4, 2, 1))


def test_remove_corner_rejects_non_corner():
    with pytest.raises(NotACornerError):
        remove_corner(SHAPE, (5, 0))
    with pytest.raises(NotACornerError):
        remove_corner(SHAPE, (3, 1))


def test_natural_word():
    assert natural_word(SHAPE) == (5, 4, 5, 3, 4, 5, 6, 2)
    assert natural_word(TowerDiagram((0, 0, 2))) == (3, 4)


def test_tower_diagram_of_permutation(omega_35421):
    assert tower_diagram(Permutation.identity()) == TowerDiagram()
    assert tower_diagram(Permutation((3, 2, 1))) == TowerDiagram((2, 1))
    assert tower_diagram(omega_35421) == TowerDiagram((4, 3, 0, 1))


@pytest.mark.parametrize("omega", list(symmetric_group(4)), ids=str)
def test_slide_and_flight_are_inverse(omega):
    for word in enumerate_reduced_words(omega):
        shape = TowerDiagram()
        for letter in word:
            result = slide(shape, letter)
            grown = shape.with_cell(result.cell)
            assert flight_number(grown, result.cell) == letter
            assert remove_corner(grown, result.cell) == shape
            shape = grown


@pytest.mark.parametrize("omega", list(symmetric_group(5)), ids=str)
def test_corner_flight_numbers_equal_descents(omega):
    numbers = [f for _, f in corners(tower_diagram(omega))]
    assert len(numbers) == len(set(numbers))
    assert set(numbers) == descents(omega)


@pytest.mark.parametrize("omega", list(symmetric_group(5)), ids=str)
def test_shape_round_trips_through_permutation(omega):
    assert permutation_of(tower_diagram(omega)) == omega


def test_sliding_succeeds_exactly_for_reduced_words():
    for length in range(6):
        for word in itertools.product(range(1, 5), repeat=length):
            slid = not isinstance(slide_word(word), Terminated)
            assert slid == is_reduced(word), word
