"""
Permutations, words in the simple transpositions, and Rothe diagrams.

Conventions:
- A permutation is stored in one-line notation at its minimal size: trailing
  fixed points are trimmed, so 1243 and 12435... compare as expected and the
  identity is the empty tuple.
- A word a1 a2 ... al stands for the product s_a1 s_a2 ... s_al taken left to
  right, where multiplying on the right by s_i swaps the entries in
  positions i and i+1.
- Rothe cells are (row, col) with row 1 at the top.
"""
from __future__ import annotations

import functools
import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from models.errors import CellNotFoundError, InvalidWordError

logger = logging.getLogger(__name__)

Cell = tuple[int, int]
Word = tuple[int, ...]
RotheDiagram = frozenset[Cell]


@dataclass(frozen=True)
class Permutation:
    oneline: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.oneline)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(f"{list(values)} is not a permutation of 1..{len(values)}")
        while values and values[-1] == len(values):
            values = values[:-1]
        object.__setattr__(self, "oneline", values)

    @classmethod
    def identity(cls) -> "Permutation":
        return cls(())

    @property
    def n(self) -> int:
        return len(self.oneline)

    def __call__(self, i: int) -> int:
        """omega_i, with fixed points beyond the stored size."""
        if i < 1:
            raise ValueError("positions start at 1")
        return self.oneline[i - 1] if i <= self.n else i

    def padded(self, n: int) -> tuple[int, ...]:
        return self.oneline + tuple(range(self.n + 1, n + 1))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.oneline, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def times_simple(self, i: int) -> "Permutation":
        """Right multiplication by s_i: swap the entries in positions i, i+1."""
        word = list(self.padded(max(self.n, i + 1)))
        word[i - 1], word[i] = word[i], word[i - 1]
        return Permutation(tuple(word))

    @property
    def length(self) -> int:
        return len(inversions(self))

    def __str__(self) -> str:
        if all(v <= 9 for v in self.oneline):
            return "".join(str(v) for v in self.oneline) or "1"
        return ",".join(str(v) for v in self.oneline)


def validate_word(w: Iterable[int]) -> Word:
    letters = tuple(int(a) for a in w)
    if any(a < 1 for a in letters):
        raise InvalidWordError(f"letters must be positive integers, got {list(letters)}")
    return letters


def apply_word(w: Sequence[int]) -> Permutation:
    """s_{w1} s_{w2} ... s_{wl}, composed left to right."""
    letters = validate_word(w)
    n = max(letters, default=0) + 1
    word = list(range(1, n + 1))
    for a in letters:
        word[a - 1], word[a] = word[a], word[a - 1]
    return Permutation(tuple(word))


def inversions(omega: Permutation) -> frozenset[Cell]:
    """Inv(omega) = {(i, j) | i < j, omega_i > omega_j}."""
    w = omega.oneline
    return frozenset(
        (i + 1, j + 1)
        for i, j in itertools.combinations(range(len(w)), 2)
        if w[i] > w[j]
    )


def is_reduced(w: Sequence[int]) -> bool:
    letters = validate_word(w)
    return len(letters) == apply_word(letters).length


def rothe_diagram(omega: Permutation) -> RotheDiagram:
    """D_omega = {(i, omega_j) | i < j, omega_i > omega_j}."""
    return frozenset((i, omega(j)) for i, j in inversions(omega))


def hook(diagram: Iterable[Cell], vertex: Cell) -> frozenset[Cell]:
    """Cells of the diagram below the vertex in its column or right of it in its row."""
    cells = frozenset(diagram)
    if vertex not in cells:
        raise CellNotFoundError(f"vertex {vertex} is not a cell of the diagram")
    i, j = vertex
    return frozenset(
        (r, s) for r, s in cells if (s == j and r >= i) or (r == i and s >= j)
    )


def hook_removal_complement(omega: Permutation) -> RotheDiagram:
    """Cells of [n]x[n] that survive removing every hook H_(i, omega_i) of the full square."""
    n = omega.n
    square = frozenset(itertools.product(range(1, n + 1), repeat=2))
    removed: set[Cell] = set()
    for i in range(1, n + 1):
        removed |= hook(square, (i, omega(i)))
    return square - removed


def descents(omega: Permutation) -> frozenset[int]:
    return frozenset(i for i in range(1, omega.n) if omega(i) > omega(i + 1))


def border_cells(omega: Permutation) -> frozenset[Cell]:
    diagram = rothe_diagram(omega)
    return frozenset(
        (i, omega(i + 1)) for i in descents(omega) if (i, omega(i + 1)) in diagram
    )


@functools.cache
def enumerate_reduced_words(omega: Permutation) -> frozenset[Word]:
    """All reduced words, by peeling right descents: omega = (omega s_i) s_i."""
    if omega.n == 0:
        return frozenset({()})
    words = set()
    for i in descents(omega):
        for prefix in enumerate_reduced_words(omega.times_simple(i)):
            words.add(prefix + (i,))
    return frozenset(words)


def symmetric_group(n: int) -> Iterator[Permutation]:
    """All n! permutations of 1..n, in lexicographic order of one-line notation."""
    for values in itertools.permutations(range(1, n + 1)):
        yield Permutation(values)


def format_word(w: Sequence[int]) -> str:
    """Compact "54534562" when every letter is a digit, comma separated otherwise."""
    if all(a <= 9 for a in w):
        return "".join(str(a) for a in w)
    return ",".join(str(a) for a in w)
