# csformula/characters/weyl_character.py

"""
Weyl characters of the dual group, computed over Xcal.

chV_lambda = alt(e^{lambda + rho^vee}) / alt(e^{rho^vee}), by exact division.
Results are cached per (dual datum, lambda).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Sequence

from csformula.algebra.group_algebra import GroupAlgebraElement, alt, exact_divide
from csformula.algebra.lattice import LatticePoint, dot
from csformula.exceptions import NonDominant
from csformula.roots.dual import DualGroupDatum
from csformula.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class Character:
    element: GroupAlgebraElement
    highest_weight: LatticePoint

    def multiplicities(self) -> Dict[LatticePoint, int]:
        return {p: int(c.coefficient(0)) for p, c in self.element.terms}

    def dimension(self) -> int:
        return int(self.element.augmentation().coefficient(0))

    def to_json(self) -> Dict:
        return {"highest_weight": list(self.highest_weight), "character": self.element.to_json()}


def alt_rho(dual: DualGroupDatum) -> GroupAlgebraElement:
    return _alt_rho(dual)


@lru_cache(maxsize=None)
def _alt_rho(dual: DualGroupDatum) -> GroupAlgebraElement:
    return alt(GroupAlgebraElement.monomial(dual.lattice_tag, dual.rho_vee), dual.weyl_group)


def weyl_character(dual: DualGroupDatum, lam: Sequence[int]) -> Character:
    lam = tuple(int(x) for x in lam)
    if len(lam) != dual.rank or not dual.dominant(lam):
        raise NonDominant(f"{lam} is not a dominant point of Xcal for {dual.source.name}")
    return _weyl_character(dual, lam)


@lru_cache(maxsize=4096)
def _weyl_character(dual: DualGroupDatum, lam: LatticePoint) -> Character:
    shifted = tuple(a + b for a, b in zip(lam, dual.rho_vee))
    numerator = alt(GroupAlgebraElement.monomial(dual.lattice_tag, shifted), dual.weyl_group)
    element = exact_divide(numerator, alt_rho(dual))
    logger.debug("character %s of %s: %d terms", lam, dual.source.name, len(element.terms))
    return Character(element=element, highest_weight=lam)


def dimension(dual: DualGroupDatum, lam: Sequence[int]) -> int:
    """
    Weyl dimension formula: product over positive dual roots of
    <gamma, lambda + rho> / <gamma, rho>, gamma the matching dual coroot.
    """
    lam = tuple(int(x) for x in lam)
    if not dual.dominant(lam):
        raise NonDominant(f"{lam} is not dominant")
    shifted = tuple(a + b for a, b in zip(lam, dual.rho_vee))
    result = Fraction(1)
    for gamma in dual.positive_coroots:
        result *= Fraction(dot(gamma, shifted), dot(gamma, dual.rho_vee))
    return int(result)
