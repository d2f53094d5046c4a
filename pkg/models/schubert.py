"""
Schubert polynomials and truncated Stanley symmetric functions.

Both are sums of reading monomials x^T over column-strict semi-standard tower
tableaux of the shape of omega: bounded cellwise by the flag tableau for the
Schubert polynomial, by a uniform cap m for the Stanley function in
x1..xm. Three independent oracles (compatible pairs, and column-strict
balanced labelings of the Rothe diagram with and without the flag) compute
the same polynomials from the other side of the correspondence.
"""
from __future__ import annotations

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Union

from models.balanced import RotheLabeling, is_balanced, is_column_strict
from models.errors import ShapeMismatchError
from models.perm import Permutation, Word, enumerate_reduced_words, rothe_diagram
from models.polynomial import Monomial, Polynomial
from models.rothify import flag_tableau
from models.tableau import TowerTableau, is_semistandard
from models.tower import TowerDiagram, tower_diagram

logger = logging.getLogger(__name__)

Bound = Union[int, TowerTableau]


@dataclass(frozen=True)
class CompatiblePair:
    a: Word
    i: tuple[int, ...]


@dataclass(frozen=True)
class EnumerationTask:
    """One subtree of the enumeration: the labels of the first non-empty tower are fixed."""

    shape: TowerDiagram
    bound: Bound
    prefix: tuple[tuple[int, ...], ...]


def reading_monomial(T: TowerTableau) -> Monomial:
    return Monomial.from_labels(v for _, v in T.items())


def tableau_leq(T: TowerTableau, other: TowerTableau) -> bool:
    if T.shape != other.shape:
        raise ShapeMismatchError("tableaux of different shapes cannot be compared")
    return all(v <= other.label(cell) for cell, v in T.items())


def _cell_bound(bound: Bound, cell) -> int:
    return bound if isinstance(bound, int) else bound.label(cell)


def _column_choices(shape: TowerDiagram, bound: Bound, i: int) -> list[tuple[int, ...]]:
    """Distinct labels for tower i, each within its cell's bound."""
    caps = [_cell_bound(bound, (i, j)) for j in range(shape.height(i))]
    if not caps:
        return [()]
    return [
        labels
        for labels in itertools.permutations(range(1, max(caps) + 1), len(caps))
        if all(v <= cap for v, cap in zip(labels, caps))
    ]


def partition_enumeration(shape: TowerDiagram, bound: Bound) -> list[EnumerationTask]:
    first = next((i for i in range(1, shape.width + 1) if shape.height(i)), None)
    if first is None:
        return [EnumerationTask(shape, bound, ())]
    empty = tuple(() for _ in range(first - 1))
    return [
        EnumerationTask(shape, bound, empty + (labels,))
        for labels in _column_choices(shape, bound, first)
    ]


def run_task(task: EnumerationTask) -> Iterator[TowerTableau]:
    shape, bound = task.shape, task.bound
    rest = [
        _column_choices(shape, bound, i)
        for i in range(len(task.prefix) + 1, shape.width + 1)
    ]
    for columns in itertools.product(*rest):
        candidate = TowerTableau(task.prefix + columns)
        if is_semistandard(candidate):
            yield candidate


def enumerate_sstt(shape: TowerDiagram, bound: Bound) -> Iterator[TowerTableau]:
    """Column-strict semi-standard tableaux of the shape with labels under the bound."""
    if isinstance(bound, TowerTableau) and bound.shape != shape:
        raise ShapeMismatchError("the bound tableau must have the enumerated shape")
    for task in partition_enumeration(shape, bound):
        yield from run_task(task)


def _task_polynomial(task: EnumerationTask) -> Polynomial:
    return Polynomial.from_monomials(reading_monomial(T) for T in run_task(task))


def sum_reading_monomials(shape: TowerDiagram, bound: Bound, workers: int = 1) -> Polynomial:
    tasks = partition_enumeration(shape, bound)
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_task_polynomial, tasks))
    else:
        parts = [_task_polynomial(task) for task in tasks]
    total = Polynomial.zero()
    for part in parts:
        total = total + part
    logger.debug("summed %s subtrees for shape %s", len(tasks), shape.heights)
    return total


def schubert(omega: Permutation, workers: int = 1) -> Polynomial:
    shape = tower_diagram(omega)
    return sum_reading_monomials(shape, flag_tableau(shape), workers)


def stanley_truncated(omega: Permutation, m: int, workers: int = 1) -> Polynomial:
    if m < 1:
        raise ValueError("the number of variables must be positive")
    return sum_reading_monomials(tower_diagram(omega), m, workers)


def _compatible_sequences(a: Word) -> Iterator[tuple[int, ...]]:
    def extend(prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        r = len(prefix)
        if r == len(a):
            yield prefix
            return
        low = 1
        if r:
            low = prefix[-1] + (1 if a[r - 1] < a[r] else 0)
        for value in range(low, a[r] + 1):
            yield from extend(prefix + (value,))

    return extend(())


def compatible_pairs(omega: Permutation) -> list[CompatiblePair]:
    return [
        CompatiblePair(a, i)
        for a in sorted(enumerate_reduced_words(omega))
        for i in _compatible_sequences(a)
    ]


def schubert_oracle_bjs(omega: Permutation) -> Polynomial:
    return Polynomial.from_monomials(
        Monomial.from_labels(pair.i) for pair in compatible_pairs(omega)
    )


def _balanced_labelings(omega: Permutation, cap) -> Iterator[RotheLabeling]:
    """Column-strict balanced labelings of D_omega, cell (r, c) labelled at most cap(r)."""
    cells = sorted(rothe_diagram(omega))
    ranges = [range(1, cap(r) + 1) for r, _ in cells]
    for values in itertools.product(*ranges):
        labeling = RotheLabeling(tuple(zip(cells, values)))
        if is_column_strict(labeling) and is_balanced(labeling):
            yield labeling


def stanley_oracle_fgrs(omega: Permutation, m: int) -> Polynomial:
    if m < 1:
        raise ValueError("the number of variables must be positive")
    return Polynomial.from_monomials(
        Monomial.from_labels(v for _, v in L) for L in _balanced_labelings(omega, lambda r: m)
    )


def schubert_oracle_fgrs(omega: Permutation) -> Polynomial:
    """Flagged version: a cell in row r takes labels at most r."""
    return Polynomial.from_monomials(
        Monomial.from_labels(v for _, v in L) for L in _balanced_labelings(omega, lambda r: r)
    )
