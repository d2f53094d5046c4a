"""
Sparse polynomials in x1, x2, ... with non-negative integer coefficients.

Terms are printed in graded-lex order (higher degree first, then larger
exponent vector first), e.g. "x1^2*x2 + x1*x2^2".
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from models.errors import CoefficientOverflowError

MAX_COEFFICIENT = 2**63 - 1

_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True)
class Monomial:
    # (variable index, exponent) pairs sorted by variable, exponents > 0
    powers: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        powers = tuple(sorted((int(v), int(e)) for v, e in self.powers if e))
        if any(v < 1 or e < 0 for v, e in powers):
            raise ValueError("variables start at x1 and exponents are non-negative")
        if len({v for v, _ in powers}) != len(powers):
            raise ValueError("each variable appears once in a monomial")
        object.__setattr__(self, "powers", powers)

    @classmethod
    def from_exponents(cls, exponents: Mapping[int, int]) -> "Monomial":
        return cls(tuple(exponents.items()))

    @classmethod
    def from_labels(cls, labels: Iterable[int]) -> "Monomial":
        """x^T: the exponent of x_v counts the labels equal to v."""
        return cls(tuple(Counter(labels).items()))

    def exponents(self) -> dict[int, int]:
        return dict(self.powers)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.powers)

    @property
    def max_variable(self) -> int:
        return max((v for v, _ in self.powers), default=0)

    def vector(self, n: int) -> tuple[int, ...]:
        exps = self.exponents()
        return tuple(exps.get(v, 0) for v in range(1, n + 1))

    def __mul__(self, other: "Monomial") -> "Monomial":
        exps = Counter(self.exponents())
        exps.update(other.exponents())
        return Monomial.from_exponents(exps)

    def swap(self, i: int, j: int) -> "Monomial":
        swap = {i: j, j: i}
        return Monomial(tuple((swap.get(v, v), e) for v, e in self.powers))

    def __str__(self) -> str:
        if not self.powers:
            return "1"
        return "*".join(f"x{v}" if e == 1 else f"x{v}^{e}" for v, e in self.powers)

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        text = text.strip()
        if text == "1":
            return cls()
        exps: Counter[int] = Counter()
        for factor in text.split("*"):
            match = _FACTOR.match(factor.strip())
            if not match:
                raise ValueError(f"cannot read the factor {factor!r}")
            exps[int(match.group(1))] += int(match.group(2) or 1)
        return cls.from_exponents(exps)


def _checked(value: int) -> int:
    if value > MAX_COEFFICIENT:
        raise CoefficientOverflowError(f"coefficient {value} exceeds 64 bits")
    return value


@dataclass(frozen=True)
class Polynomial:
    # (monomial, coefficient) pairs in graded-lex order, coefficients > 0
    terms: tuple[tuple[Monomial, int], ...] = ()

    def __post_init__(self):
        combined: Counter[Monomial] = Counter()
        for monomial, coeff in self.terms:
            if coeff < 0:
                raise ValueError("coefficients are non-negative")
            combined[monomial] += coeff
        width = max((m.max_variable for m in combined), default=0)
        ordered = sorted(
            ((m, _checked(c)) for m, c in combined.items() if c),
            key=lambda term: (term[0].degree, term[0].vector(width)),
            reverse=True,
        )
        object.__setattr__(self, "terms", tuple(ordered))

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def one(cls) -> "Polynomial":
        return cls(((Monomial(), 1),))

    @classmethod
    def from_monomials(cls, monomials: Iterable[Monomial]) -> "Polynomial":
        return cls(tuple(Counter(monomials).items()))

    def coefficient(self, monomial: Monomial) -> int:
        return dict(self.terms).get(monomial, 0)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def max_variable(self) -> int:
        return max((m.max_variable for m, _ in self.terms), default=0)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial(self.terms + other.terms)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial(
            tuple((m1 * m2, _checked(c1 * c2)) for m1, c1 in self.terms for m2, c2 in other.terms)
        )

    def specialize_zero(self, variables: Iterable[int]) -> "Polynomial":
        """Set the given variables to 0."""
        dropped = set(variables)
        return Polynomial(
            tuple((m, c) for m, c in self.terms if not dropped & set(m.exponents()))
        )

    def truncate(self, m: int) -> "Polynomial":
        """Keep x1..xm, set every later variable to 0."""
        return self.specialize_zero(range(m + 1, self.max_variable + 1))

    def swap(self, i: int, j: int) -> "Polynomial":
        return Polynomial(tuple((m.swap(i, j), c) for m, c in self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(str(m) if c == 1 else f"{c}*{m}" for m, c in self.terms)

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        text = text.strip()
        if text == "0":
            return cls()
        terms = []
        for chunk in text.split("+"):
            coeff, _, rest = chunk.strip().partition("*")
            if coeff.isdigit() and rest:
                terms.append((Monomial.parse(rest), int(coeff)))
            elif coeff.isdigit() and coeff != "1":
                terms.append((Monomial(), int(coeff)))
            else:
                terms.append((Monomial.parse(chunk), 1))
        return cls(tuple(terms))
