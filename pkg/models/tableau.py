"""
Tower tableaux: labelings of tower diagrams.

A tableau is stored column by column, each tower listing its labels from the
bottom cell upwards. Standard tableaux carry the labels 1..n and record a
sliding order; semi-standard tableaux are those whose maximal-label corners
can be stripped one at a time, minimal flight number first.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence, Union

from models.errors import (
    AmbiguousCornerError,
    CellNotFoundError,
    EmptyTableauError,
    NotSemistandardError,
    NotStandardError,
    ShapeMismatchError,
)
from models.perm import Cell, Word, enumerate_reduced_words, validate_word
from models.tower import (
    Path,
    Terminated,
    TowerDiagram,
    corners,
    flight,
    natural_word,
    permutation_of,
    slide,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TowerTableau:
    # columns[i-1] holds the labels of tower i, bottom to top
    columns: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        columns = tuple(tuple(int(v) for v in col) for col in self.columns)
        if any(v < 1 for col in columns for v in col):
            raise ValueError("tableau labels must be positive integers")
        while columns and not columns[-1]:
            columns = columns[:-1]
        object.__setattr__(self, "columns", columns)

    @classmethod
    def from_labels(cls, labels: Mapping[Cell, int]) -> "TowerTableau":
        width = max((i for i, _ in labels), default=0)
        columns = []
        for i in range(1, width + 1):
            height = 1 + max((j for c, j in labels if c == i), default=-1)
            try:
                columns.append(tuple(labels[(i, j)] for j in range(height)))
            except KeyError as exc:
                raise ShapeMismatchError(
                    f"labels do not fill tower {i} from the bottom: missing {exc.args[0]}"
                ) from None
        return cls(tuple(columns))

    @property
    def shape(self) -> TowerDiagram:
        return TowerDiagram(tuple(len(col) for col in self.columns))

    @property
    def size(self) -> int:
        return sum(len(col) for col in self.columns)

    def label(self, cell: Cell) -> int:
        i, j = cell
        if not (1 <= i <= len(self.columns) and 0 <= j < len(self.columns[i - 1])):
            raise CellNotFoundError(f"{cell} is not a cell of the tableau")
        return self.columns[i - 1][j]

    def items(self) -> Iterator[tuple[Cell, int]]:
        for i, col in enumerate(self.columns, start=1):
            for j, v in enumerate(col):
                yield (i, j), v

    def labels(self) -> dict[Cell, int]:
        return dict(self.items())

    def max_label(self) -> int:
        return max((v for col in self.columns for v in col), default=0)

    def cell_of(self, label: int) -> Cell:
        for cell, v in self.items():
            if v == label:
                return cell
        raise CellNotFoundError(f"no cell carries the label {label}")

    def without_top(self, cell: Cell) -> "TowerTableau":
        """c <- T: drop the top cell of a tower, keeping every other label."""
        i, j = cell
        if j != len(self.columns[i - 1]) - 1:
            raise ValueError(f"{cell} is not the top cell of tower {i}")
        columns = list(self.columns)
        columns[i - 1] = columns[i - 1][:-1]
        return TowerTableau(tuple(columns))

    def relabel(self, mapping: Mapping[int, int]) -> "TowerTableau":
        return TowerTableau(tuple(tuple(mapping[v] for v in col) for col in self.columns))


# Standard tableaux share the representation; the name marks the precondition.
StandardTowerTableau = TowerTableau

SlideWordResult = Union[TowerTableau, Terminated]


def slide_word(w: Sequence[int]) -> SlideWordResult:
    """Slide the letters in order into the empty diagram, labelling the k-th cell with k."""
    letters = validate_word(w)
    shape = TowerDiagram()
    labels: dict[Cell, int] = {}
    for position, a in enumerate(letters, start=1):
        result = slide(shape, a)
        if isinstance(result, Terminated):
            logger.debug("sliding %s terminated at letter %s", letters, position)
            return Terminated(position)
        shape = shape.with_cell(result.cell)
        labels[result.cell] = position
    return TowerTableau.from_labels(labels)


def _labels_are_one_to_n(T: TowerTableau) -> bool:
    return sorted(v for _, v in T.items()) == list(range(1, T.size + 1))


def reading_word(T: StandardTowerTableau) -> Word:
    """alpha_i = flight number of the cell labelled i inside T restricted to labels <= i."""
    if not _labels_are_one_to_n(T):
        raise NotStandardError("labels of a standard tableau are exactly 1..n")
    letters = []
    current = T
    for label in range(T.size, 0, -1):
        cell = current.cell_of(label)
        i, j = cell
        result = flight(current.shape, cell) if j == len(current.columns[i - 1]) - 1 else None
        if not isinstance(result, Path):
            raise NotStandardError(f"the cell labelled {label} is not a corner of T<={label}")
        letters.append(result.flight_number)
        current = current.without_top(cell)
    return tuple(reversed(letters))


def is_standard(T: TowerTableau) -> bool:
    try:
        reading_word(T)
    except NotStandardError:
        return False
    return True


def natural_tableau(shape: TowerDiagram) -> StandardTowerTableau:
    """Label 1 at the right-most bottom cell, then bottom to top and right to left."""
    columns: list[tuple[int, ...]] = [()] * shape.width
    next_label = 1
    for i in range(shape.width, 0, -1):
        h = shape.height(i)
        columns[i - 1] = tuple(range(next_label, next_label + h))
        next_label += h
    return TowerTableau(tuple(columns))


def _strip_order(T: TowerTableau) -> list[Cell] | None:
    """Cells in the order the semi-standard recursion removes them, or None if it gets stuck."""
    order = []
    current = T
    while current.size:
        top = current.max_label()
        candidates = sorted(
            (f, cell) for cell, f in corners(current.shape) if current.label(cell) == top
        )
        if not candidates:
            return None
        if len(candidates) > 1 and candidates[0][0] == candidates[1][0]:
            raise AmbiguousCornerError(
                f"corners {candidates[0][1]} and {candidates[1][1]} share flight number "
                f"{candidates[0][0]}"
            )
        cell = candidates[0][1]
        order.append(cell)
        current = current.without_top(cell)
    return order


def is_semistandard(T: TowerTableau) -> bool:
    return _strip_order(T) is not None


def standardize(T: TowerTableau) -> StandardTowerTableau:
    """S(T): the corner stripped k-th from the end receives the label k."""
    order = _strip_order(T)
    if order is None:
        raise NotSemistandardError("tableau is not semi-standard")
    labels = {cell: T.size - k for k, cell in enumerate(order)}
    return TowerTableau.from_labels(labels)


def remove_initial(T: StandardTowerTableau, check: bool | None = None) -> StandardTowerTableau:
    """Drop the cell labelled 1: push its tower down, swap it with the next tower, shift labels."""
    if T.size == 0:
        raise EmptyTableauError("cannot remove the initial cell of an empty tableau")
    i, j = T.cell_of(1)
    columns = list(T.columns) + [()]
    tower = columns[i - 1][:j] + columns[i - 1][j + 1 :]
    columns[i - 1], columns[i] = columns[i], tower
    result = TowerTableau(tuple(tuple(v - 1 for v in col) for col in columns))
    check = __debug__ if check is None else check
    if check:
        expected = slide_word(reading_word(T)[1:])
        if expected != result:
            raise AssertionError(f"initial-segment removal disagrees with sliding: {result} != {expected}")
    return result


def restrict(T: TowerTableau, m: int) -> TowerTableau:
    """T<=m: the cells with label at most m."""
    columns = []
    for i, col in enumerate(T.columns, start=1):
        kept = tuple(v for v in col if v <= m)
        if col[: len(kept)] != kept:
            raise ShapeMismatchError(f"labels <= {m} do not form a tower in column {i}")
        columns.append(kept)
    return TowerTableau(tuple(columns))


def label_sequence(T: TowerTableau) -> list[int]:
    return sorted(v for _, v in T.items())


def standard_tableaux(shape: TowerDiagram) -> list[StandardTowerTableau]:
    """Every standard tableau of the shape, one per reduced word of its permutation."""
    words = sorted(enumerate_reduced_words(permutation_of(shape)))
    return [slide_word(w) for w in words]


__all__ = [
    "StandardTowerTableau",
    "TowerTableau",
    "is_semistandard",
    "is_standard",
    "label_sequence",
    "natural_tableau",
    "natural_word",
    "reading_word",
    "remove_initial",
    "restrict",
    "slide_word",
    "standard_tableaux",
    "standardize",
]
