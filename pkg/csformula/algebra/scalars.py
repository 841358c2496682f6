# csformula/algebra/scalars.py

"""
Laurent scalars in v = q^{1/2}.

A LaurentScalar is a finite sum  sum_k c_k v^k  with exact rational c_k.
Every power of q that shows up in the library (modular characters,
normalizations, specializations) is carried by one of these.

Values are immutable and hashable. Zero coefficients are never stored, so
equality is plain structural equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Tuple, Union

Rational = Union[int, Fraction]


def parse_rational(text: Union[str, int, Fraction]) -> Fraction:
    """
    Read "n", "n/d" or an int/Fraction into a Fraction.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    return Fraction(str(text).strip())


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class LaurentScalar:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Dict[int, Rational], Iterable[Tuple[int, Rational]], None] = None):
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        collected: Dict[int, Fraction] = {}
        for power, coeff in items:
            collected[int(power)] = collected.get(int(power), Fraction(0)) + Fraction(coeff)
        self._terms: Tuple[Tuple[int, Fraction], ...] = tuple(
            sorted((p, c) for p, c in collected.items() if c != 0)
        )
        self._hash = hash(self._terms)

    # ----- constructors -----

    @classmethod
    def zero(cls) -> "LaurentScalar":
        return cls()

    @classmethod
    def one(cls) -> "LaurentScalar":
        return cls({0: 1})

    @classmethod
    def constant(cls, value: Rational) -> "LaurentScalar":
        return cls({0: value})

    @classmethod
    def v_power(cls, power: int, coeff: Rational = 1) -> "LaurentScalar":
        return cls({power: coeff})

    @classmethod
    def coerce(cls, value: Union["LaurentScalar", Rational]) -> "LaurentScalar":
        if isinstance(value, LaurentScalar):
            return value
        return cls.constant(value)

    # ----- inspection -----

    @property
    def terms(self) -> Tuple[Tuple[int, Fraction], ...]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coefficient(self, power: int) -> Fraction:
        for p, c in self._terms:
            if p == power:
                return c
        return Fraction(0)

    # ----- arithmetic -----

    def __add__(self, other: Union["LaurentScalar", Rational]) -> "LaurentScalar":
        other = LaurentScalar.coerce(other)
        return LaurentScalar(list(self._terms) + list(other._terms))

    __radd__ = __add__

    def __neg__(self) -> "LaurentScalar":
        return LaurentScalar((p, -c) for p, c in self._terms)

    def __sub__(self, other: Union["LaurentScalar", Rational]) -> "LaurentScalar":
        return self + (-LaurentScalar.coerce(other))

    def __rsub__(self, other: Rational) -> "LaurentScalar":
        return LaurentScalar.coerce(other) - self

    def __mul__(self, other: Union["LaurentScalar", Rational]) -> "LaurentScalar":
        other = LaurentScalar.coerce(other)
        out: Dict[int, Fraction] = {}
        for p1, c1 in self._terms:
            for p2, c2 in other._terms:
                out[p1 + p2] = out.get(p1 + p2, Fraction(0)) + c1 * c2
        return LaurentScalar(out)

    __rmul__ = __mul__

    def inverse(self) -> "LaurentScalar":
        """
        Only monomials c*v^k are units of Q[v, v^-1].
        """
        if not self.is_monomial():
            raise ZeroDivisionError(f"{self} is not a unit of Q[v, 1/v]")
        power, coeff = self._terms[0]
        return LaurentScalar({-power: 1 / coeff})

    def __pow__(self, exponent: int) -> "LaurentScalar":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = LaurentScalar.one()
        for _ in range(exponent):
            result = result * self
        return result

    def evaluate(self, v_value: Fraction) -> Fraction:
        total = Fraction(0)
        for power, coeff in self._terms:
            total += coeff * Fraction(v_value) ** power
        return total

    # ----- comparison -----

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentScalar.constant(other)
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return self._hash

    # ----- serialization -----

    def to_json(self) -> List[List]:
        return [[p, format_rational(c)] for p, c in self._terms]

    @classmethod
    def from_json(cls, data: Iterable[Iterable]) -> "LaurentScalar":
        return cls((int(p), parse_rational(c)) for p, c in data)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for power, coeff in reversed(self._terms):
            if power == 0:
                body = format_rational(abs(coeff))
            else:
                mono = "v" if power == 1 else f"v^{power}"
                body = mono if abs(coeff) == 1 else f"{format_rational(abs(coeff))}*{mono}"
            sign = "-" if coeff < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LaurentScalar({self})"
