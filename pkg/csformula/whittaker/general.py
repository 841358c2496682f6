# csformula/whittaker/general.py

"""
Whittaker values for a general group G', through G' -> G x T with G adjoint.

For pi_star(mu') = (mu, lambda):
    W'(m_mu')   = xi^{-1}(t_lambda) delta^{1/2}(m_mu) chV_{mu - rho^vee} * W(m_{rho^vee})
    W'_O(m_mu') = xi^{-1}(t_lambda) delta^{1/2}(m_mu) chV_mu * W'_O(1)
as elements of R'' = C[X_*(A) + X_*(T)], with xi^{-1}(t_lambda) = e^{(0, -lambda)}.
Each result is checked to lie in the image of R' = C[X_*(A')].
"""

from __future__ import annotations

from typing import Optional, Sequence, Tuple

from csformula.algebra.group_algebra import GroupAlgebraElement
from csformula.algebra.lattice import LatticePoint
from csformula.characters.weyl_character import weyl_character
from csformula.exceptions import LatticeMismatch, NonDominant, NonStrictlyDominant, NotInImageOfRprime
from csformula.roots.isogeny import IsogenyDecomposition
from csformula.utils.logger import get_logger
from csformula.whittaker.delta import delta_half
from csformula.whittaker.formulas import cs_value

logger = get_logger(__name__)


def reduce_to_product(dec: IsogenyDecomposition, mu_prime: Sequence[int]) -> Tuple[LatticePoint, LatticePoint]:
    """
    pi_star(mu') = (mu, lambda_T).
    """
    return dec.split(tuple(mu_prime))


def to_product(dec: IsogenyDecomposition, value: GroupAlgebraElement) -> GroupAlgebraElement:
    """
    C[Xcal(G)] = C[X_*(A)] -> R'', e^mu -> e^{(mu, 0)}.
    """
    adjoint_dual = dec.adjoint.dual_datum()
    if value.lattice == dec.product_tag:
        return value
    if value.lattice != adjoint_dual.lattice_tag:
        raise LatticeMismatch(f"cannot place an element of {value.lattice} in {dec.product_tag}")
    pad = (0,) * dec.torus_rank

    def place(point: LatticePoint) -> LatticePoint:
        # Xcal of an adjoint datum is X_*(A) itself
        source = adjoint_dual.restrict(point)
        if source is None:
            raise LatticeMismatch(f"{point} is not in X_*(A) of {dec.adjoint.name}")
        return tuple(source) + pad

    return value.map_points(place, lattice=dec.product_tag, rank=dec.product_rank)


def torus_factor(dec: IsogenyDecomposition, lam_t: Sequence[int]) -> GroupAlgebraElement:
    """
    xi^{-1}(t_lambda) = e^{(0, -lambda)} in R''.
    """
    point = (0,) * dec.adjoint.rank + tuple(-x for x in lam_t)
    return GroupAlgebraElement.monomial(dec.product_tag, point)


def _checked(dec: IsogenyDecomposition, value: GroupAlgebraElement) -> GroupAlgebraElement:
    if not dec.in_image(value):
        raise NotInImageOfRprime(f"value {value} is not in the image of C[X_*(A')] for {dec.source.name}")
    return value


def general_cs_value(
    dec: IsogenyDecomposition, mu_prime: Sequence[int], norm: Optional[GroupAlgebraElement] = None
) -> GroupAlgebraElement:
    mu_prime = tuple(mu_prime)
    if not dec.source.strictly_dominant(mu_prime):
        raise NonStrictlyDominant(f"{mu_prime} is not strictly dominant for {dec.source.name}")
    adjoint = dec.adjoint
    dual = adjoint.dual_datum()
    mu, lam_t = reduce_to_product(dec, mu_prime)
    if norm is None:
        norm = to_product(dec, cs_value(adjoint, adjoint.rho_vee_point()))
    highest = tuple(a - b for a, b in zip(dual.include(mu), dual.rho_vee))
    character = to_product(dec, weyl_character(dual, highest).element)
    value = torus_factor(dec, lam_t) * character * to_product(dec, norm) * delta_half(adjoint, mu)
    return _checked(dec, value)


def general_cs_O_value(
    dec: IsogenyDecomposition, lam_prime: Sequence[int], norm: Optional[GroupAlgebraElement] = None
) -> GroupAlgebraElement:
    lam_prime = tuple(lam_prime)
    if not dec.source.dominant(lam_prime):
        raise NonDominant(f"{lam_prime} is not dominant for {dec.source.name}")
    adjoint = dec.adjoint
    dual = adjoint.dual_datum()
    lam, mu_t = reduce_to_product(dec, lam_prime)
    if norm is None:
        norm = GroupAlgebraElement.one(dec.product_tag, dec.product_rank)
    character = to_product(dec, weyl_character(dual, dual.include(lam)).element)
    value = torus_factor(dec, mu_t) * character * to_product(dec, norm) * delta_half(adjoint, lam)
    return _checked(dec, value)


def pull_back_to_source(dec: IsogenyDecomposition, value: GroupAlgebraElement) -> GroupAlgebraElement:
    """
    The element of C[X_*(A')] whose image in R'' is `value`.
    """
    return dec.pull_back(value)
