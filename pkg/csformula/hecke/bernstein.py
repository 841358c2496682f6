# csformula/hecke/bernstein.py

"""
Iwahori-Hecke algebra in the Bernstein presentation.

This module is responsible for:
1. BernsteinElement: finite sums of coeff * T_w * theta_lambda (normal form,
   order "T_theta") or coeff * theta_lambda * T_w (order "theta_T"), with w
   in the finite Weyl group and lambda in X_*(A).
2. HeckeAlgebra: products in normal form. theta's are moved to the right of
   T's with
       theta_mu T_s = T_s theta_{s mu} - C_s(s mu),
   where T_s theta_lam = theta_{s lam} T_s + C_s(lam) and
       C_s(lam) =  sum_{j < <a,lam>} q_j(s) theta_{lam - j a^vee}       if <a,lam> > 0
                =  0                                                   if <a,lam> = 0
                = -sum_{j < <a,s lam>} q_j(s) theta_{s lam - j a^vee}  if <a,lam> < 0,
   and T-words are contracted from the left with
       T_s T_z = T_{sz} if l(sz) > l(z), else (q(s) - 1) T_z + q(s) T_{sz}.
3. 1_K = sum_w T_w and theta_K(lambda) = theta_lambda * 1_K.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from csformula.algebra.lattice import LatticePoint
from csformula.exceptions import LatticeMismatch, NotSimpleRoot
from csformula.hecke.parameters import Param, ParameterRing
from csformula.roots.root_datum import RootDatum
from csformula.utils.logger import get_logger

logger = get_logger(__name__)

Key = Tuple[int, LatticePoint]
Scalar = Union[Param, int]

T_THETA = "T_theta"
THETA_T = "theta_T"


class BernsteinElement:
    __slots__ = ("algebra", "order", "_terms")

    def __init__(self, algebra: "HeckeAlgebra", terms=None, order: str = T_THETA):
        if order not in (T_THETA, THETA_T):
            raise ValueError(f"unknown term order '{order}'")
        self.algebra = algebra
        self.order = order
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        collected: Dict[Key, Param] = {}
        for (w, lam), coeff in items:
            lam = tuple(int(x) for x in lam)
            if len(lam) != algebra.rank:
                raise LatticeMismatch(f"theta exponent {lam} does not match rank {algebra.rank}")
            coeff = Param.coerce(coeff)
            collected[(w, lam)] = collected[(w, lam)] + coeff if (w, lam) in collected else coeff
        self._terms: Dict[Key, Param] = {k: c for k, c in collected.items() if not c.is_zero()}

    @property
    def terms(self) -> Dict[Key, Param]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def normal_form(self) -> "BernsteinElement":
        return self.algebra.normal_form(self)

    def __add__(self, other: "BernsteinElement") -> "BernsteinElement":
        a, b = self.normal_form(), other.normal_form()
        return BernsteinElement(self.algebra, list(a._terms.items()) + list(b._terms.items()))

    def __neg__(self) -> "BernsteinElement":
        return BernsteinElement(self.algebra, {k: -c for k, c in self._terms.items()}, self.order)

    def __sub__(self, other: "BernsteinElement") -> "BernsteinElement":
        return self + (-other)

    def __mul__(self, other: Union["BernsteinElement", Scalar]) -> "BernsteinElement":
        if isinstance(other, BernsteinElement):
            return self.algebra.mul(self, other)
        return self.scale(other)

    def __rmul__(self, other: Scalar) -> "BernsteinElement":
        return self.scale(other)

    def scale(self, factor: Scalar) -> "BernsteinElement":
        factor = Param.coerce(factor)
        return BernsteinElement(self.algebra, {k: c * factor for k, c in self._terms.items()}, self.order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BernsteinElement):
            return NotImplemented
        return self.normal_form()._terms == other.normal_form()._terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.normal_form()._terms.items())))

    def sorted_terms(self) -> List[Tuple[Key, Param]]:
        W = self.algebra.weyl
        return sorted(self._terms.items(), key=lambda kv: (-W.length(kv[0][0]), W.word(kv[0][0]), kv[0][1]))

    def to_json(self) -> Dict:
        W = self.algebra.weyl
        return {
            "datum": self.algebra.datum.name,
            "order": self.order,
            "terms": [
                {"w": [i + 1 for i in W.word(w)], "lambda": list(lam), "coeff": str(c)}
                for (w, lam), c in self.sorted_terms()
            ],
        }

    def __str__(self) -> str:
        return self.algebra.format(self)

    def __repr__(self) -> str:
        return f"BernsteinElement({self})"


class HeckeAlgebra:
    def __init__(self, datum: RootDatum, split: bool = False):
        self.datum = datum
        self.weyl = datum.weyl_group
        self.rank = datum.rank
        self.ring = ParameterRing(self.weyl, split=split)
        self.split = split
        self._move = lru_cache(maxsize=None)(self._move_uncached)

    # ----- basis elements -----

    def zero(self) -> BernsteinElement:
        return BernsteinElement(self)

    def one(self) -> BernsteinElement:
        return self.theta((0,) * self.rank)

    def scalar(self, value: Scalar) -> BernsteinElement:
        return BernsteinElement(self, {(0, (0,) * self.rank): value})

    def theta(self, lam: Sequence[int]) -> BernsteinElement:
        return BernsteinElement(self, {(0, tuple(lam)): 1})

    def T(self, w: int) -> BernsteinElement:
        return BernsteinElement(self, {(w, (0,) * self.rank): 1})

    def T_simple(self, i: int) -> BernsteinElement:
        self._check_simple(i)
        return self.T(self.weyl.generator(i))

    def _check_simple(self, i: int) -> None:
        if not 0 <= i < self.weyl.num_generators:
            raise NotSimpleRoot(f"s{i + 1} is not a simple reflection of {self.datum.name}")

    # ----- Bernstein relation -----

    def correction(self, i: int, lam: LatticePoint) -> Dict[LatticePoint, Param]:
        """
        C_s(lam) with T_s theta_lam = theta_{s lam} T_s + C_s(lam).
        """
        W = self.weyl
        n = W.pairing(i, lam)
        coroot = W.vectors[i]
        out: Dict[LatticePoint, Param] = {}
        if n > 0:
            base, sign, count = lam, 1, n
        elif n < 0:
            base, sign, count = W.reflect(i, lam), -1, -n
        else:
            return out
        for j in range(count):
            point = tuple(x - j * c for x, c in zip(base, coroot))
            out[point] = self.ring.q_j(j, i) * sign
        return out

    def ts_theta(self, i: int, lam: Sequence[int]) -> BernsteinElement:
        """
        T_s theta_lam written as theta_{s lam} T_s + C_s(lam) (order theta_T).
        """
        self._check_simple(i)
        lam = tuple(lam)
        terms: Dict[Key, Param] = {(self.weyl.generator(i), self.weyl.reflect(i, lam)): Param.one()}
        for point, coeff in self.correction(i, lam).items():
            terms[(0, point)] = terms.get((0, point), Param.zero()) + coeff
        return BernsteinElement(self, terms, THETA_T)

    def theta_mul(self, lam: Sequence[int], mu: Sequence[int]) -> BernsteinElement:
        return self.theta(tuple(a + b for a, b in zip(lam, mu)))

    # ----- rewriting -----

    def _left_T(self, i: int, terms: Dict[Key, Param]) -> Dict[Key, Param]:
        """
        T_{s_i} * (sum c T_z theta_lam).
        """
        W = self.weyl
        q = self.ring.q(i)
        out: Dict[Key, Param] = {}

        def put(key: Key, value: Param) -> None:
            out[key] = out[key] + value if key in out else value

        for (z, lam), c in terms.items():
            sz = W.left_mult(i, z)
            if W.length(sz) > W.length(z):
                put((sz, lam), c)
            else:
                put((z, lam), c * (q - 1))
                put((sz, lam), c * q)
        return {k: v for k, v in out.items() if not v.is_zero()}

    def _move_uncached(self, lam: LatticePoint, word: Tuple[int, ...]) -> Tuple[Tuple[Key, Param], ...]:
        """
        Normal form of theta_lam * T_{word[0]} ... T_{word[-1]}.
        """
        if not word:
            return (((0, lam), Param.one()),)
        i, rest = word[0], word[1:]
        s_lam = self.weyl.reflect(i, lam)
        # theta_lam T_s = T_s theta_{s lam} - C_s(s lam)
        head = self._left_T(i, dict(self._move(s_lam, rest)))
        out: Dict[Key, Param] = dict(head)
        for point, coeff in self.correction(i, s_lam).items():
            for key, c in self._move(point, rest):
                value = -coeff * c
                out[key] = out[key] + value if key in out else value
        return tuple((k, v) for k, v in out.items() if not v.is_zero())

    def normal_form(self, element: BernsteinElement) -> BernsteinElement:
        if element.order == T_THETA:
            return element
        out: Dict[Key, Param] = {}
        for (w, lam), coeff in element._terms.items():
            for key, c in self._move(lam, self.weyl.word(w)):
                value = coeff * c
                out[key] = out[key] + value if key in out else value
        return BernsteinElement(self, out)

    def mul(self, a: BernsteinElement, b: BernsteinElement) -> BernsteinElement:
        if a.algebra is not self or b.algebra is not self:
            raise LatticeMismatch("Bernstein elements belong to different algebras")
        a, b = a.normal_form(), b.normal_form()
        out: Dict[Key, Param] = {}
        for (w, lam), c1 in a._terms.items():
            for (u, mu), c2 in b._terms.items():
                # T_w theta_lam T_u theta_mu
                moved = {
                    (x, tuple(p + m for p, m in zip(nu, mu))): c
                    for (x, nu), c in self._move(lam, self.weyl.word(u))
                }
                for i in reversed(self.weyl.word(w)):
                    moved = self._left_T(i, moved)
                for key, c in moved.items():
                    value = c1 * c2 * c
                    out[key] = out[key] + value if key in out else value
        return BernsteinElement(self, out)

    # ----- spherical idempotent -----

    def one_K(self) -> BernsteinElement:
        return BernsteinElement(self, {(w, (0,) * self.rank): 1 for w in range(self.weyl.order)})

    def theta_K(self, lam: Sequence[int]) -> BernsteinElement:
        return self.theta(lam) * self.one_K()

    def poincare(self) -> Param:
        return self.ring.poincare_polynomial()

    def commutation_residual(self, i: int, lam: Sequence[int]) -> BernsteinElement:
        """
        T_s (theta_lam + theta_{s lam}) - (theta_lam + theta_{s lam}) T_s.
        """
        lam = tuple(lam)
        sym = self.theta(lam) + self.theta(self.weyl.reflect(i, lam))
        t = self.T_simple(i)
        return t * sym - sym * t

    # ----- text -----

    def _word_text(self, w: int) -> List[str]:
        return [f"T[s{i + 1}]" for i in self.weyl.word(w)]

    def format(self, element: BernsteinElement) -> str:
        if element.is_zero():
            return "0"
        pieces: List[str] = []
        zero = (0,) * self.rank
        for (w, lam), coeff in element.sorted_terms():
            factors = self._word_text(w)
            if lam != zero:
                theta = "th[" + ",".join(str(x) for x in lam) + "]"
                factors = [theta] + factors if element.order == THETA_T else factors + [theta]
            text = str(coeff)
            negative = False
            if factors:
                if coeff == 1:
                    text = ""
                elif coeff == -1:
                    text, negative = "", True
                elif coeff.is_monomial():
                    if text.startswith("-"):
                        text, negative = text[1:], True
                else:
                    text = f"({text})"
                body = "*".join(([text] if text else []) + factors)
            else:
                body = text
                if coeff.is_monomial() and text.startswith("-"):
                    body, negative = text[1:], True
                elif not coeff.is_monomial() and pieces:
                    body = f"({text})"
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)

    def from_terms(self, terms: Iterable[Tuple[Key, Scalar]], order: str = T_THETA) -> BernsteinElement:
        return BernsteinElement(self, list(terms), order)


@lru_cache(maxsize=32)
def hecke_algebra(datum: RootDatum, split: bool = False) -> HeckeAlgebra:
    return HeckeAlgebra(datum, split)
