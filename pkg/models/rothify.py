"""
Rothification: from tower tableaux to labeled Rothe diagrams and back.

The complete tower tableau of a standard tableau T pairs T (first quadrant)
with the tableau of the reversed reading word. The latter is stored as it
comes out of sliding; drawn in the third quadrant it is reflected across
x + y = 0, which sends its tower i' to depth i' below the axis. A cell u of T
labelled k therefore meets the virtual cell labelled l+1-k in Rothe row
"tower index of the virtual cell" and Rothe column "tower index of u".
"""
from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass

from models.balanced import RotheLabeling
from models.errors import (
    CellNotFoundError,
    NotACornerError,
    NotStandardError,
    ShapeMismatchError,
)
from models.perm import Cell, Permutation, rothe_diagram
from models.tableau import (
    StandardTowerTableau,
    TowerTableau,
    label_sequence,
    reading_word,
    slide_word,
    standardize,
)
from models.tower import NoFlight, TowerDiagram, flight, tower_diagram

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CompleteTowerTableau:
    main: TowerTableau
    virtual_: TowerTableau

    def __post_init__(self):
        if self.main.size != self.virtual_.size:
            raise ShapeMismatchError("both halves of a complete tableau have the same size")


@dataclass(frozen=True)
class DoubleCompletion:
    """The double-labelled complete tableau: each cell carries (a, b), a the
    semi-standard label and b the standardized label."""

    main: tuple[tuple[Cell, tuple[int, int]], ...]
    virtual_: tuple[tuple[Cell, tuple[int, int]], ...]


@dataclass(frozen=True)
class TowerHook:
    vertex: Cell
    members: frozenset[Cell]


def complete(T: StandardTowerTableau) -> CompleteTowerTableau:
    virtual = slide_word(tuple(reversed(reading_word(T))))
    return CompleteTowerTableau(main=T, virtual_=virtual)


def rothify_complete(C: CompleteTowerTableau) -> RotheLabeling:
    """Pair the main label k with the virtual label l+1-k: row from the virtual
    cell's tower, column from the main cell's tower."""
    total = C.main.size
    expected = list(range(1, total + 1))
    if label_sequence(C.main) != expected or label_sequence(C.virtual_) != expected:
        raise NotStandardError("both halves of a complete tableau carry the labels 1..l")
    virtual_cells = {v: cell for cell, v in C.virtual_.items()}
    return RotheLabeling.from_mapping(
        {(virtual_cells[total + 1 - k][0], col): k for (col, _), k in C.main.items()}
    )


def _rothe_positions(T: StandardTowerTableau) -> dict[int, Cell]:
    """Rothe cell reached by the label k of a standard tableau."""
    return {k: cell for cell, k in rothify_complete(complete(T))}


def rothify(T: StandardTowerTableau) -> RotheLabeling:
    return rothify_complete(complete(T))


def rothify_ss(T: TowerTableau) -> RotheLabeling:
    """Place cells by the standardization, label them with the semi-standard labels."""
    standard = standardize(T)
    positions = _rothe_positions(standard)
    return RotheLabeling.from_mapping(
        {positions[b]: T.label(cell) for cell, b in standard.items()}
    )


def completion(T: TowerTableau) -> DoubleCompletion:
    standard = standardize(T)
    completed = complete(standard)
    total = T.size
    a_of_b = {b: T.label(cell) for cell, b in standard.items()}
    main = tuple((cell, (a_of_b[b], b)) for cell, b in standard.items())
    virtual = tuple(
        (cell, (a_of_b[total + 1 - b], b)) for cell, b in completed.virtual_.items()
    )
    return DoubleCompletion(main=main, virtual_=virtual)


def push_up(L: RotheLabeling, omega: Permutation) -> TowerTableau:
    """Push labels up to the towers of omega, increasing from bottom to top."""
    if L.diagram != rothe_diagram(omega):
        raise ShapeMismatchError(f"labeling is not on the Rothe diagram of {omega}")
    shape = tower_diagram(omega)
    by_column: dict[int, list[int]] = defaultdict(list)
    for (_, col), v in L:
        by_column[col].append(v)
    return TowerTableau(
        tuple(tuple(sorted(by_column[i])) for i in range(1, shape.width + 1))
    )


def _east_neighbour(shape: TowerDiagram, cell: Cell) -> Cell | None:
    """The cell adjacent to `cell` from the right, if any."""
    i, j = cell
    d = i + j
    for k in range(i + 1, d + 2):
        h = shape.height(k)
        if h > d + 1 - k:
            return (k, d + 1 - k)
        if h > d - k:
            # tower k holds a cell on diagonal d and blocks the way
            return None
    return None


def east(shape: TowerDiagram, cell: Cell) -> list[Cell]:
    chain = [cell]
    while (nxt := _east_neighbour(shape, chain[-1])) is not None:
        chain.append(nxt)
    return chain


def north(shape: TowerDiagram, cell: Cell) -> list[Cell]:
    i, j = cell
    return [(i, y) for y in range(j, shape.height(i))]


def tower_hook(shape: TowerDiagram, cell: Cell) -> TowerHook:
    if cell not in shape:
        raise CellNotFoundError(f"{cell} is not a cell of the diagram")
    return TowerHook(vertex=cell, members=frozenset(north(shape, cell)) | frozenset(east(shape, cell)))


def flag_tableau(shape: TowerDiagram) -> TowerTableau:
    """Label the lowest unlabelled cell of the left-most unfinished tower by its
    flight number, then give the same number to its East chain; repeat."""
    labels: dict[Cell, int] = {}
    for cell in sorted(shape.cells()):
        if cell in labels:
            continue
        result = flight(shape, cell)
        if isinstance(result, NoFlight):
            raise NotACornerError(f"{cell} has no flight path in the flag construction")
        for member in east(shape, cell):
            labels.setdefault(member, result.flight_number)
    logger.debug("flag tableau of %s: %s", shape.heights, labels)
    return TowerTableau.from_labels(labels)
