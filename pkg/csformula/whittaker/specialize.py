# csformula/whittaker/specialize.py

"""
Numeric evaluation of group-algebra elements at a point of the dual torus.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional, Sequence, Tuple

from csformula.algebra.group_algebra import GroupAlgebraElement
from csformula.algebra.scalars import parse_rational
from csformula.exceptions import IrrationalSqrt, LatticeMismatch


def rational_sqrt(value: Fraction) -> Fraction:
    value = Fraction(value)
    if value <= 0:
        raise IrrationalSqrt(f"q = {value} must be positive")
    num, den = isqrt(value.numerator), isqrt(value.denominator)
    if num * num != value.numerator or den * den != value.denominator:
        raise IrrationalSqrt(f"q = {value} is not the square of a rational; pass q = t^2")
    return Fraction(num, den)


@dataclass(frozen=True)
class SatakeSpecialization:
    point: Tuple[Fraction, ...]
    q_value: Fraction
    v_value: Optional[Fraction] = None

    def __post_init__(self):
        if any(z == 0 for z in self.point):
            raise ValueError("specialization point must have nonzero coordinates")
        if self.q_value <= 1:
            raise ValueError(f"q must exceed 1, got {self.q_value}")
        if self.v_value is not None and self.v_value * self.v_value != self.q_value:
            raise ValueError(f"v = {self.v_value} is not a square root of q = {self.q_value}")

    @classmethod
    def parse(cls, point: str, q: str) -> "SatakeSpecialization":
        coords = tuple(parse_rational(x) for x in point.split(",") if x.strip())
        return cls(coords, parse_rational(q))

    @property
    def v(self) -> Fraction:
        return self.v_value if self.v_value is not None else rational_sqrt(self.q_value)


def evaluate(element: GroupAlgebraElement, point: Sequence[Fraction], v_value: Fraction) -> Fraction:
    if len(point) != element.rank:
        raise LatticeMismatch(f"point has {len(point)} coordinates, element lives in rank {element.rank}")
    total = Fraction(0)
    for exponent, coeff in element.terms:
        term = coeff.evaluate(v_value)
        for z, k in zip(point, exponent):
            term *= Fraction(z) ** k
        total += term
    return total


def specialize(element: GroupAlgebraElement, s: SatakeSpecialization) -> Fraction:
    return evaluate(element, s.point, s.v)


def schur_sum(z: Fraction, lam: int) -> Fraction:
    """
    sum_{k=0}^{lam} z^{lam - 2k}.
    """
    return sum((Fraction(z) ** (lam - 2 * k) for k in range(lam + 1)), Fraction(0))
