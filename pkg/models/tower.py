"""
Tower diagrams, sliding, and flight paths.

A tower diagram is a sequence of towers standing on the x-axis; tower i
occupies the strip [i-1, i]. A cell is named by its south-east corner
(i, j): tower i, height j >= 0. The main diagonal of (i, j) lies on the
line x + y = i + j.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator, Union

from models.errors import CellNotFoundError, NotACornerError
from models.perm import Cell, Permutation, Word, apply_word, rothe_diagram

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TowerDiagram:
    # heights[0] is the height of tower 1; trailing empty towers are trimmed
    heights: tuple[int, ...] = ()

    def __post_init__(self):
        heights = tuple(int(h) for h in self.heights)
        if any(h < 0 for h in heights):
            raise ValueError(f"tower heights must be non-negative, got {list(heights)}")
        while heights and heights[-1] == 0:
            heights = heights[:-1]
        object.__setattr__(self, "heights", heights)

    @property
    def width(self) -> int:
        return len(self.heights)

    @property
    def size(self) -> int:
        return sum(self.heights)

    def height(self, i: int) -> int:
        return self.heights[i - 1] if 1 <= i <= self.width else 0

    def __contains__(self, cell: Cell) -> bool:
        i, j = cell
        return 0 <= j < self.height(i)

    def cells(self) -> Iterator[Cell]:
        for i, h in enumerate(self.heights, start=1):
            for j in range(h):
                yield (i, j)

    def top_cells(self) -> Iterator[Cell]:
        for i, h in enumerate(self.heights, start=1):
            if h:
                yield (i, h - 1)

    def with_cell(self, cell: Cell) -> "TowerDiagram":
        i, j = cell
        if j != self.height(i):
            raise ValueError(f"{cell} does not sit on top of tower {i}")
        heights = list(self.heights) + [0] * max(0, i - self.width)
        heights[i - 1] += 1
        return TowerDiagram(tuple(heights))

    def without_top(self, cell: Cell) -> "TowerDiagram":
        i, j = cell
        if j != self.height(i) - 1:
            raise ValueError(f"{cell} is not the top cell of tower {i}")
        heights = list(self.heights)
        heights[i - 1] -= 1
        return TowerDiagram(tuple(heights))


@dataclass(frozen=True)
class Placed:
    cell: Cell


@dataclass(frozen=True)
class Terminated:
    # 1-based position of the failing letter when sliding a whole word
    position: int | None = None


SlideResult = Union[Placed, Terminated]


@dataclass(frozen=True)
class Path:
    cells: tuple[Cell, ...]
    flight_number: int


@dataclass(frozen=True)
class NoFlight:
    pass


FlightResult = Union[Path, NoFlight]


def _leftmost_on_diagonal(diagram: TowerDiagram, d: int, start: int) -> int | None:
    """First tower k >= start holding a cell on x + y = d."""
    for k in range(start, d + 1):
        if diagram.height(k) > d - k >= 0:
            return k
    return None


def slide(diagram: TowerDiagram, alpha: int) -> SlideResult:
    """Slide the letter alpha into the diagram (cases S1 and S2 with their zigzags)."""
    if alpha < 1:
        raise ValueError("letters must be positive")
    start, a = 1, alpha
    while True:
        i = _leftmost_on_diagonal(diagram, a - 1, start)
        if i is None:
            # S1: nothing on x + y = a - 1 among the remaining towers
            h = diagram.height(a)
            if h == 0:
                return Placed((a, 0))
            if h == 1:
                logger.debug("slide of %s terminates at tower %s (S1)", alpha, a)
                return Terminated()
            logger.debug("zigzag over tower %s, continuing with %s", a, a + 1)
            start, a = a + 1, a + 1
        else:
            # S2: tower i is the leftmost with a cell on x + y = a - 1
            j = a - i
            h = diagram.height(i)
            if h == j:
                return Placed((i, j))
            if h == j + 1:
                logger.debug("slide of %s terminates at tower %s (S2)", alpha, i)
                return Terminated()
            logger.debug("zigzag over tower %s, continuing with %s", i, a + 1)
            start, a = i + 1, a + 1


def flight(diagram: TowerDiagram, cell: Cell) -> FlightResult:
    """Move north-west from the cell along its diagonal and report the flight path."""
    if cell not in diagram:
        raise CellNotFoundError(f"{cell} is not a cell of the diagram")
    path: list[Cell] = []
    i, j = cell
    while True:
        d = i + j
        for k in range(i - 1, 0, -1):
            h = diagram.height(k)
            if h > d - k:
                # through the main diagonal of (k, d-k); continue from the cell below it
                path = [(k, d - k), (i, j)] + path
                i, j = k, d - k - 1
                break
            if h == d - k:
                return NoFlight()
        else:
            path = [(i, j)] + path
            return Path(tuple(path), d)


def corners(diagram: TowerDiagram) -> frozenset[tuple[Cell, int]]:
    found = set()
    for cell in diagram.top_cells():
        result = flight(diagram, cell)
        if isinstance(result, Path):
            found.add((cell, result.flight_number))
    return frozenset(found)


def flight_number(diagram: TowerDiagram, cell: Cell) -> int | None:
    result = flight(diagram, cell)
    return result.flight_number if isinstance(result, Path) else None


def remove_corner(diagram: TowerDiagram, cell: Cell) -> TowerDiagram:
    """c <- T: the diagram without the corner cell c."""
    if cell not in diagram:
        raise CellNotFoundError(f"{cell} is not a cell of the diagram")
    i, j = cell
    if j != diagram.height(i) - 1 or isinstance(flight(diagram, cell), NoFlight):
        raise NotACornerError(f"{cell} is not a corner of the diagram")
    return diagram.without_top(cell)


def natural_word(diagram: TowerDiagram) -> Word:
    """eta = eta_n ... eta_1 with eta_k = s_k s_(k+1) ... s_(k + |T_k| - 1)."""
    letters: list[int] = []
    for k in range(diagram.width, 0, -1):
        letters.extend(range(k, k + diagram.height(k)))
    return tuple(letters)


def tower_diagram(omega: Permutation) -> TowerDiagram:
    """The shape of omega: Rothe cells pushed up to the top border, column by column."""
    counts: dict[int, int] = {}
    for _, col in rothe_diagram(omega):
        counts[col] = counts.get(col, 0) + 1
    width = max(counts, default=0)
    return TowerDiagram(tuple(counts.get(c, 0) for c in range(1, width + 1)))


def permutation_of(diagram: TowerDiagram) -> Permutation:
    return apply_word(natural_word(diagram))
