# csformula/algebra/group_algebra.py

"""
Group algebra of a lattice over Laurent scalars.

A GroupAlgebraElement is a finite sum  sum_lambda c_lambda e^lambda  where
lambda runs over integer coordinate vectors of one lattice (named by a tag)
and c_lambda is a LaurentScalar. The rings R, R', R'' and C[Xcal] of the
library are all instances, told apart by their tag.

This module is responsible for:
1. Ring operations (add, mul) with lattice-tag checking.
2. Weyl-group action, alternation and the symmetric/alternating tests.
3. Exact division, used to turn alternating quotients into characters.
4. JSON serialization with terms in canonical (lexicographic) order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING, Callable, Dict, Iterable, List, Optional, Tuple, Union

from csformula.algebra.lattice import LatticePoint
from csformula.algebra.scalars import LaurentScalar, Rational
from csformula.exceptions import LatticeMismatch, NonDivisible

if TYPE_CHECKING:
    from csformula.roots.weyl import WeylGroup

Coefficient = Union[LaurentScalar, Rational]


class GroupAlgebraElement:
    __slots__ = ("lattice", "rank", "_terms", "_hash")

    def __init__(
        self,
        lattice: str,
        rank: int,
        terms: Union[Dict[LatticePoint, Coefficient], Iterable[Tuple[LatticePoint, Coefficient]], None] = None,
    ):
        self.lattice = lattice
        self.rank = rank
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        collected: Dict[LatticePoint, LaurentScalar] = {}
        for point, coeff in items:
            point = tuple(int(x) for x in point)
            if len(point) != rank:
                raise LatticeMismatch(
                    f"point {point} has length {len(point)}, lattice {lattice} has rank {rank}"
                )
            coeff = LaurentScalar.coerce(coeff)
            collected[point] = collected[point] + coeff if point in collected else coeff
        self._terms: Tuple[Tuple[LatticePoint, LaurentScalar], ...] = tuple(
            sorted((p, c) for p, c in collected.items() if not c.is_zero())
        )
        self._hash = hash((lattice, self._terms))

    # ----- constructors -----

    @classmethod
    def zero(cls, lattice: str, rank: int) -> "GroupAlgebraElement":
        return cls(lattice, rank)

    @classmethod
    def one(cls, lattice: str, rank: int) -> "GroupAlgebraElement":
        return cls(lattice, rank, {(0,) * rank: 1})

    @classmethod
    def monomial(cls, lattice: str, point: LatticePoint, coeff: Coefficient = 1) -> "GroupAlgebraElement":
        return cls(lattice, len(point), {tuple(point): coeff})

    # ----- inspection -----

    @property
    def terms(self) -> Tuple[Tuple[LatticePoint, LaurentScalar], ...]:
        return self._terms

    def support(self) -> List[LatticePoint]:
        return [p for p, _ in self._terms]

    def coefficient(self, point: LatticePoint) -> LaurentScalar:
        for p, c in self._terms:
            if p == tuple(point):
                return c
        return LaurentScalar.zero()

    def is_zero(self) -> bool:
        return not self._terms

    def augmentation(self) -> LaurentScalar:
        """
        Image under e^lambda -> 1.
        """
        return sum((c for _, c in self._terms), LaurentScalar.zero())

    def _check(self, other: "GroupAlgebraElement") -> None:
        if not isinstance(other, GroupAlgebraElement):
            raise TypeError(f"expected GroupAlgebraElement, got {type(other).__name__}")
        if other.lattice != self.lattice or other.rank != self.rank:
            raise LatticeMismatch(f"cannot combine elements of {self.lattice} and {other.lattice}")

    # ----- arithmetic -----

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check(other)
        return GroupAlgebraElement(self.lattice, self.rank, list(self._terms) + list(other._terms))

    def __neg__(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.lattice, self.rank, [(p, -c) for p, c in self._terms])

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + (-other)

    def __mul__(self, other: Union["GroupAlgebraElement", Coefficient]) -> "GroupAlgebraElement":
        if not isinstance(other, GroupAlgebraElement):
            return self.scale(other)
        self._check(other)
        out: Dict[LatticePoint, LaurentScalar] = {}
        for p1, c1 in self._terms:
            for p2, c2 in other._terms:
                key = tuple(a + b for a, b in zip(p1, p2))
                term = c1 * c2
                out[key] = out[key] + term if key in out else term
        return GroupAlgebraElement(self.lattice, self.rank, out)

    def __rmul__(self, other: Coefficient) -> "GroupAlgebraElement":
        return self.scale(other)

    def scale(self, factor: Coefficient) -> "GroupAlgebraElement":
        factor = LaurentScalar.coerce(factor)
        return GroupAlgebraElement(self.lattice, self.rank, [(p, c * factor) for p, c in self._terms])

    def map_points(
        self,
        fn: Callable[[LatticePoint], LatticePoint],
        lattice: Optional[str] = None,
        rank: Optional[int] = None,
    ) -> "GroupAlgebraElement":
        """
        Push the support forward along `fn`, optionally onto another lattice.
        """
        return GroupAlgebraElement(
            lattice if lattice is not None else self.lattice,
            rank if rank is not None else self.rank,
            [(fn(p), c) for p, c in self._terms],
        )

    def retag(self, lattice: str) -> "GroupAlgebraElement":
        return GroupAlgebraElement(lattice, self.rank, self._terms)

    # ----- comparison -----

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.lattice == other.lattice and self._terms == other._terms

    def __hash__(self) -> int:
        return self._hash

    # ----- serialization -----

    def to_json(self) -> Dict:
        return {
            "lattice": self.lattice,
            "terms": [{"exp": list(p), "coeff": c.to_json()} for p, c in self._terms],
        }

    @classmethod
    def from_json(cls, data: Dict, rank: Optional[int] = None) -> "GroupAlgebraElement":
        terms = [(tuple(t["exp"]), LaurentScalar.from_json(t["coeff"])) for t in data["terms"]]
        if rank is None:
            if not terms:
                raise ValueError("rank is required to decode an empty element")
            rank = len(terms[0][0])
        return cls(data["lattice"], rank, terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for point, coeff in reversed(self._terms):
            mono = "e^(" + ",".join(str(x) for x in point) + ")"
            if coeff == LaurentScalar.one():
                pieces.append(mono)
            elif coeff.is_monomial():
                pieces.append(f"{coeff}*{mono}")
            else:
                pieces.append(f"({coeff})*{mono}")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"GroupAlgebraElement[{self.lattice}]({self})"


# ----------------------------------------------------------------------------
# module-level operations
# ----------------------------------------------------------------------------

def add(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    return a + b


def mul(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    return a * b


def weyl_act(weyl: "WeylGroup", w: int, a: GroupAlgebraElement) -> GroupAlgebraElement:
    """
    e^lambda -> e^{w(lambda)}, coefficients untouched.
    """
    if a.lattice != weyl.lattice:
        raise LatticeMismatch(f"Weyl group acts on {weyl.lattice}, element lives on {a.lattice}")
    return a.map_points(lambda p: weyl.act(w, p))


def alt(a: GroupAlgebraElement, weyl: "WeylGroup") -> GroupAlgebraElement:
    """
    sum_w sign(w) (w . a)
    """
    if a.lattice != weyl.lattice:
        raise LatticeMismatch(f"Weyl group acts on {weyl.lattice}, element lives on {a.lattice}")
    terms = []
    for w in range(weyl.order):
        sign = weyl.sign(w)
        for point, coeff in a.terms:
            terms.append((weyl.act(w, point), coeff if sign > 0 else -coeff))
    return GroupAlgebraElement(a.lattice, a.rank, terms)


def is_symmetric(a: GroupAlgebraElement, weyl: "WeylGroup") -> bool:
    return all(weyl_act(weyl, weyl.generator(i), a) == a for i in range(weyl.num_generators))


def is_alternating(a: GroupAlgebraElement, weyl: "WeylGroup") -> bool:
    return all(weyl_act(weyl, weyl.generator(i), a) == -a for i in range(weyl.num_generators))


# ----- exact division -----

Monomial = Tuple[int, ...]


def _flatten(a: GroupAlgebraElement) -> Dict[Monomial, Fraction]:
    # (lattice coords..., v power) -> rational; v is the last variable in lex order
    flat: Dict[Monomial, Fraction] = {}
    for point, coeff in a.terms:
        for power, c in coeff.terms:
            flat[point + (power,)] = c
    return flat


def _shift_to_origin(poly: Dict[Monomial, Fraction]) -> Tuple[Dict[Monomial, Fraction], Monomial]:
    n = len(next(iter(poly)))
    low = tuple(min(m[i] for m in poly) for i in range(n))
    return {tuple(x - y for x, y in zip(m, low)): c for m, c in poly.items()}, low


def exact_divide(num: GroupAlgebraElement, den: GroupAlgebraElement) -> GroupAlgebraElement:
    """
    The unique c with c * den == num.

    Both operands are translated so every exponent (including the v power)
    is nonnegative, then divided by leading-term elimination in lex order.
    A nonzero remainder raises NonDivisible.
    """
    num._check(den)
    if den.is_zero():
        raise ZeroDivisionError("division by the zero element")
    if num.is_zero():
        return GroupAlgebraElement.zero(num.lattice, num.rank)

    f, low_num = _shift_to_origin(_flatten(num))
    g, low_den = _shift_to_origin(_flatten(den))
    lead = max(g)
    lead_coeff = g[lead]

    quotient: Dict[Monomial, Fraction] = {}
    while f:
        top = max(f)
        if any(t < l for t, l in zip(top, lead)):
            raise NonDivisible(f"{num} is not divisible by {den}")
        shift = tuple(t - l for t, l in zip(top, lead))
        factor = f[top] / lead_coeff
        quotient[shift] = quotient.get(shift, Fraction(0)) + factor
        for mono, c in g.items():
            key = tuple(a + b for a, b in zip(mono, shift))
            value = f.get(key, Fraction(0)) - factor * c
            if value:
                f[key] = value
            else:
                f.pop(key, None)

    offset = tuple(a - b for a, b in zip(low_num, low_den))
    terms = []
    for mono, c in quotient.items():
        full = tuple(a + b for a, b in zip(mono, offset))
        terms.append((full[:-1], LaurentScalar.v_power(full[-1], c)))
    return GroupAlgebraElement(num.lattice, num.rank, terms)
