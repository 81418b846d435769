"""Sparse polynomials in root-indexed variables with exact rational coefficients.

A monomial is a sorted tuple of roots (with repetition for powers); the zero
coefficient is never stored. This is all the chart machinery needs: sums,
products, exact evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .roots import PositiveRoot

Monomial = tuple[PositiveRoot, ...]


def _mono(vars_: tuple[PositiveRoot, ...]) -> Monomial:
    return tuple(sorted(vars_, key=PositiveRoot.sort_key))


@dataclass(frozen=True)
class Polynomial:
    terms: dict[Monomial, Fraction]

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial({})

    @staticmethod
    def const(c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial({(): c} if c else {})

    @staticmethod
    def var(root: PositiveRoot) -> "Polynomial":
        return Polynomial({(root,): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def constant_value(self) -> Fraction | None:
        """The constant if the polynomial is constant, else None."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and () in self.terms:
            return self.terms[()]
        return None

    def variables(self) -> set[PositiveRoot]:
        return {v for mono in self.terms for v in mono}

    def __add__(self, other: "Polynomial | Fraction | int") -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.const(other)
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            s = terms.get(mono, Fraction(0)) + c
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
        return Polynomial(terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial({mono: -c for mono, c in self.terms.items()})

    def __sub__(self, other: "Polynomial | Fraction | int") -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.const(other)
        return self + (-other)

    def __mul__(self, other: "Polynomial | Fraction | int") -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            if not c:
                return Polynomial.zero()
            return Polynomial({mono: c * v for mono, v in self.terms.items()})
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _mono(m1 + m2)
                s = terms.get(mono, Fraction(0)) + c1 * c2
                if s:
                    terms[mono] = s
                else:
                    terms.pop(mono, None)
        return Polynomial(terms)

    __rmul__ = __mul__

    def evaluate(self, values: Mapping[PositiveRoot, Fraction]) -> Fraction:
        total = Fraction(0)
        for mono, c in self.terms.items():
            prod = c
            for v in mono:
                prod *= values[v]
            total += prod
        return total

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in a stable display order: by degree, then variable keys."""
        return sorted(
            self.terms.items(),
            key=lambda item: (len(item[0]), [v.sort_key() for v in item[0]]),
        )
