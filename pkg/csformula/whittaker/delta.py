# csformula/whittaker/delta.py
# delta^{1/2}(m_lambda) = v^{-sum_{alpha > 0} d_alpha <alpha, lambda>}
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from csformula.algebra.lattice import dot
from csformula.algebra.scalars import LaurentScalar
from csformula.roots.root_datum import RootDatum


def delta_exponent(datum: RootDatum, lam: Sequence) -> Fraction:
    return -sum(
        (d * Fraction(dot(a, lam)) for a, d in zip(datum.positive_roots, datum.mult)), Fraction(0)
    )


def delta_half(datum: RootDatum, lam: Sequence[int]) -> LaurentScalar:
    exponent = delta_exponent(datum, lam)
    if exponent.denominator != 1:
        raise ValueError(f"delta exponent {exponent} is not an integer at {tuple(lam)}")
    return LaurentScalar.v_power(int(exponent))
