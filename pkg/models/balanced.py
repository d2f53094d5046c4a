"""
Labelings of Rothe diagrams: balanced, column-strict and injective labelings,
the canonical labeling of a reduced word, and recovery of the word from an
injective balanced labeling.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from models.errors import CellNotFoundError, NotInjectiveError, NotReducedError
from models.perm import Cell, RotheDiagram, Word, apply_word, format_word, is_reduced

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RotheLabeling:
    # ((row, col), label) pairs sorted by cell
    entries: tuple[tuple[Cell, int], ...] = ()

    def __post_init__(self):
        entries = tuple(sorted(((int(r), int(c)), int(v)) for (r, c), v in self.entries))
        cells = [cell for cell, _ in entries]
        if len(set(cells)) != len(cells):
            raise ValueError("a labeling assigns exactly one label per cell")
        if any(r < 1 or c < 1 or v < 1 for (r, c), v in entries):
            raise ValueError("rows, columns and labels are positive integers")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_mapping(cls, labels: Mapping[Cell, int]) -> "RotheLabeling":
        return cls(tuple(labels.items()))

    @property
    def diagram(self) -> RotheDiagram:
        return frozenset(cell for cell, _ in self.entries)

    def as_dict(self) -> dict[Cell, int]:
        return dict(self.entries)

    def label(self, cell: Cell) -> int:
        labels = self.as_dict()
        if cell not in labels:
            raise CellNotFoundError(f"{cell} is not a cell of the labeling")
        return labels[cell]

    def __iter__(self) -> Iterator[tuple[Cell, int]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def hook_path(diagram: RotheDiagram, vertex: Cell) -> tuple[list[Cell], int]:
    """Hook cells ordered bottom to top then left to right, and the vertex position."""
    i, j = vertex
    below = sorted((r for r, s in diagram if s == j and r > i), reverse=True)
    right = sorted(s for r, s in diagram if r == i and s > j)
    path = [(r, j) for r in below] + [vertex] + [(i, s) for s in right]
    return path, len(below)


def unbalanced_vertex(L: RotheLabeling) -> Cell | None:
    """First vertex (row-major) whose label moves when its hook is sorted, or None."""
    labels = L.as_dict()
    for vertex in sorted(labels):
        path, position = hook_path(L.diagram, vertex)
        ordered = sorted((labels[c] for c in path), reverse=True)
        if ordered[position] != labels[vertex]:
            return vertex
    return None


def is_balanced(L: RotheLabeling) -> bool:
    return unbalanced_vertex(L) is None


def is_column_strict(L: RotheLabeling) -> bool:
    seen = Counter((col, v) for (_, col), v in L)
    return all(n == 1 for n in seen.values())


def is_injective(L: RotheLabeling) -> bool:
    return sorted(v for _, v in L) == list(range(1, len(L) + 1))


def canonical_labeling(alpha: Sequence[int]) -> RotheLabeling:
    """D_alpha: step r, swapping values a < b, labels the cell (omega^-1(b), a) with r."""
    letters = tuple(alpha)
    if not is_reduced(letters):
        raise NotReducedError(f"{format_word(letters)} is not a reduced word")
    omega = apply_word(letters)
    inverse = omega.inverse()
    word = list(range(1, max(letters, default=0) + 2))
    labels = {}
    for r, a in enumerate(letters, start=1):
        low, high = word[a - 1], word[a]
        word[a - 1], word[a] = high, low
        labels[(inverse(high), low)] = r
    return RotheLabeling.from_mapping(labels)


def recover_word(L: RotheLabeling) -> Word:
    """alpha_i = I(i) + R+(i) + U+(i) for the cell carrying label i."""
    if not is_injective(L):
        raise NotInjectiveError("word recovery needs the labels 1..l, each exactly once")
    cell_of = {v: cell for cell, v in L}
    letters = []
    for i in range(1, len(L) + 1):
        row, col = cell_of[i]
        larger_in_row = sum(1 for (r, _), v in L if r == row and v > i)
        larger_above = sum(1 for (r, c), v in L if c == col and r < row and v > i)
        letters.append(row + larger_in_row + larger_above)
    return tuple(letters)
