import itertools

import pytest

from models.balanced import (
    RotheLabeling,
    canonical_labeling,
    hook_path,
    is_balanced,
    is_column_strict,
    is_injective,
    recover_word,
    unbalanced_vertex,
)
from models.errors import CellNotFoundError, NotInjectiveError, NotReducedError
from models.perm import enumerate_reduced_words, hook, rothe_diagram, symmetric_group

CANONICAL_42341234 = {
    (1, 1): 5,
    (1, 2): 2,
    (2, 1): 6,
    (2, 2): 3,
    (2, 4): 1,
    (3, 1): 7,
    (3, 2): 4,
    (4, 1): 8,
}


def test_labeling_rejects_repeated_cells():
    with pytest.raises(ValueError):
        RotheLabeling((((1, 1), 1), ((1, 1), 2)))


def test_label_lookup(balanced_example):
    assert balanced_example.label((2, 4)) == 4
    with pytest.raises(CellNotFoundError):
        balanced_example.label((5, 5))


def test_hook_path_order(balanced_example):
    path, position = hook_path(balanced_example.diagram, (1, 1))
    assert path == [(4, 1), (3, 1), (2, 1), (1, 1), (1, 2)]
    assert position == 3


def test_single_cell_is_balanced():
    assert is_balanced(RotheLabeling.from_mapping({(1, 1): 9}))


def test_example_labeling_is_balanced(balanced_example):
    assert is_balanced(balanced_example)
    assert is_column_strict(balanced_example)
    assert not is_injective(balanced_example)


def test_raised_vertex_breaks_balance(balanced_example):
    labels = balanced_example.as_dict()
    labels[(1, 1)] = 6
    broken = RotheLabeling.from_mapping(labels)
    assert not is_balanced(broken)
    assert unbalanced_vertex(broken) == (1, 1)


def test_empty_labeling():
    empty = RotheLabeling()
    assert is_column_strict(empty)
    assert is_injective(empty)
    assert is_balanced(empty)


def test_canonical_labeling_examples():
    assert canonical_labeling((1,)).as_dict() == {(1, 1): 1}
    canonical = canonical_labeling((4, 2, 3, 4, 1, 2, 3, 4))
    assert canonical.as_dict() == CANONICAL_42341234
    assert is_injective(canonical)


def test_canonical_labeling_rejects_non_reduced():
    with pytest.raises(NotReducedError):
        canonical_labeling((1, 1))


def test_recover_word_examples():
    canonical = RotheLabeling.from_mapping(CANONICAL_42341234)
    assert recover_word(canonical) == (4, 2, 3, 4, 1, 2, 3, 4)
    assert recover_word(RotheLabeling.from_mapping({(1, 1): 1})) == (1,)


def test_recover_word_rejects_repeated_labels(balanced_example):
    with pytest.raises(NotInjectiveError):
        recover_word(balanced_example)


@pytest.mark.parametrize("omega", list(symmetric_group(4)), ids=str)
def test_canonical_labelings_are_injective_balanced_and_invertible(omega):
    for word in enumerate_reduced_words(omega):
        canonical = canonical_labeling(word)
        assert is_injective(canonical)
        assert is_balanced(canonical)
        assert recover_word(canonical) == word


def _balanced_by_counting(L: RotheLabeling) -> bool:
    """A vertex keeps its slot in the sorted hook when the larger labels fit in the cells below it."""
    labels = L.as_dict()
    for (i, j), v in labels.items():
        cells = hook(labels, (i, j))
        below = sum(1 for r, s in cells if s == j and r > i)
        larger = sum(1 for c in cells if labels[c] > v)
        at_least = sum(1 for c in cells if labels[c] >= v)
        if not larger <= below < at_least:
            return False
    return True


def _weak_orders(n):
    """One value tuple per weak order of n cells: the values used are exactly 1..max."""
    for values in itertools.product(range(1, n + 1), repeat=n):
        if set(values) == set(range(1, max(values, default=0) + 1)):
            yield values


SMALL_DIAGRAMS = sorted(
    {tuple(sorted(rothe_diagram(w))) for w in symmetric_group(5) if w.length <= 6},
    key=lambda cells: (len(cells), cells),
)


@pytest.mark.parametrize("diagram", SMALL_DIAGRAMS, ids=str)
def test_balanced_check_agrees_with_label_counting(diagram):
    # balance only compares labels, so labels up to the cell count reduce to weak orders
    for values in _weak_orders(len(diagram)):
        L = RotheLabeling(tuple(zip(diagram, values)))
        assert is_balanced(L) == _balanced_by_counting(L), L


def test_hook_path_covers_hook(balanced_example):
    for vertex in balanced_example.diagram:
        path, _ = hook_path(balanced_example.diagram, vertex)
        assert set(path) == hook(balanced_example.diagram, vertex)
