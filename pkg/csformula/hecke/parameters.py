# csformula/hecke/parameters.py

"""
Coefficient ring of the Hecke algebra.

A Param is a polynomial with rational coefficients in commuting symbols:
"v" (Laurent), "q(sK)" and "qJ(sK)". Simple reflections that are conjugate
in W share their parameters, so the symbol names the smallest 1-based index
of the conjugacy class.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

from csformula.algebra.scalars import format_rational
from csformula.roots.weyl import WeylGroup

Monomial = Tuple[Tuple[str, int], ...]
Rational = Union[int, Fraction]


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    powers: Dict[str, int] = dict(a)
    for name, e in b:
        powers[name] = powers.get(name, 0) + e
    return tuple(sorted((n, e) for n, e in powers.items() if e))


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _mono_str(m: Monomial) -> str:
    return "*".join(name if e == 1 else f"{name}^{e}" for name, e in m)


class Param:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[Monomial, Rational], Iterable[Tuple[Monomial, Rational]], None] = None):
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        collected: Dict[Monomial, Fraction] = {}
        for mono, coeff in items:
            mono = tuple(sorted((n, int(e)) for n, e in mono if e))
            collected[mono] = collected.get(mono, Fraction(0)) + Fraction(coeff)
        self._terms: Tuple[Tuple[Monomial, Fraction], ...] = tuple(
            sorted((m, c) for m, c in collected.items() if c != 0)
        )
        self._hash = hash(self._terms)

    @classmethod
    def zero(cls) -> "Param":
        return cls()

    @classmethod
    def one(cls) -> "Param":
        return cls({(): 1})

    @classmethod
    def constant(cls, value: Rational) -> "Param":
        return cls({(): value})

    @classmethod
    def symbol(cls, name: str, power: int = 1) -> "Param":
        return cls({((name, power),): 1})

    @classmethod
    def coerce(cls, value: Union["Param", Rational]) -> "Param":
        return value if isinstance(value, Param) else cls.constant(value)

    @property
    def terms(self) -> Tuple[Tuple[Monomial, Fraction], ...]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __add__(self, other: Union["Param", Rational]) -> "Param":
        other = Param.coerce(other)
        return Param(list(self._terms) + list(other._terms))

    __radd__ = __add__

    def __neg__(self) -> "Param":
        return Param([(m, -c) for m, c in self._terms])

    def __sub__(self, other: Union["Param", Rational]) -> "Param":
        return self + (-Param.coerce(other))

    def __rsub__(self, other: Rational) -> "Param":
        return Param.coerce(other) - self

    def __mul__(self, other: Union["Param", Rational]) -> "Param":
        other = Param.coerce(other)
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms:
            for m2, c2 in other._terms:
                key = _mono_mul(m1, m2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return Param(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Param":
        if exponent < 0:
            if not self.is_monomial():
                raise ZeroDivisionError("only monomials have inverses in the parameter ring")
            (mono, coeff), = self._terms
            return Param({tuple((n, -e) for n, e in mono): 1 / coeff}) ** (-exponent)
        result = Param.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Param.constant(other)
        if not isinstance(other, Param):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        ordered = sorted(self._terms, key=lambda t: (-_mono_degree(t[0]), t[0]))
        out = ""
        for i, (mono, coeff) in enumerate(ordered):
            sign = "-" if coeff < 0 else "+"
            magnitude = abs(coeff)
            if not mono:
                body = format_rational(magnitude)
            elif magnitude == 1:
                body = _mono_str(mono)
            else:
                body = f"{format_rational(magnitude)}*{_mono_str(mono)}"
            if i == 0:
                out = body if sign == "+" else f"-{body}"
            else:
                out += f"{sign}{body}"
        return out

    def __repr__(self) -> str:
        return f"Param({self})"


class ParameterRing:
    """
    Names the parameters q(s) and q_j(s) of one Weyl group. With split=True
    every q_j(s) is replaced by q(s) - 1.
    """

    def __init__(self, weyl: WeylGroup, split: bool = False):
        self.weyl = weyl
        self.split = split
        self.classes = weyl.generator_classes()

    def label(self, i: int) -> str:
        return f"s{self.classes[i] + 1}"

    def q(self, i: int) -> Param:
        return Param.symbol(f"q({self.label(i)})")

    def q_j(self, j: int, i: int) -> Param:
        if self.split:
            return self.q(i) - 1
        return Param.symbol(f"q{j}({self.label(i)})")

    def v(self, power: int = 1) -> Param:
        return Param.symbol("v", power)

    def q_of_word(self, word: Iterable[int]) -> Param:
        result = Param.one()
        for i in word:
            result = result * self.q(i)
        return result

    def poincare_polynomial(self) -> Param:
        """
        sum over w of q_w, with q_w the product of q(s) along a reduced word.
        """
        total = Param.zero()
        for w in range(self.weyl.order):
            total = total + self.q_of_word(self.weyl.word(w))
        return total


def poincare_polynomial(weyl: WeylGroup) -> Param:
    return ParameterRing(weyl).poincare_polynomial()
