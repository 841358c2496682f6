# csformula/whittaker/formulas.py

"""
Closed formulas for spherical Whittaker functions.

This module is responsible for:
1. cs_value: W(m_mu) = r * delta^{1/2}(m_mu) * chV_{mu - rho^vee} * alt(e^{rho^vee}),
   computed over Xcal, and its table over a set of strictly dominant mu.
2. conductor_O_value: W_O(m_lambda) = delta^{1/2}(m_lambda) * chV_lambda * W_O(1).
3. conductor_swap: W_p(m_mu) = W_O(m_{mu - rho^vee}), for rho^vee in X_*(A).
4. adjoint_ratio: W(m_{lambda + rho^vee}) / W(m_{rho^vee}) by exact division.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from csformula.algebra.group_algebra import GroupAlgebraElement, alt, exact_divide
from csformula.algebra.lattice import LatticePoint
from csformula.characters.weyl_character import alt_rho, weyl_character
from csformula.exceptions import LatticeMismatch, NonDominant, NonStrictlyDominant
from csformula.roots.root_datum import RootDatum
from csformula.utils.logger import get_logger
from csformula.whittaker.delta import delta_half
from csformula.whittaker.tables import WhittakerTable, build_table

logger = get_logger(__name__)


def _unit(datum: RootDatum) -> GroupAlgebraElement:
    dual = datum.dual_datum()
    return GroupAlgebraElement.one(dual.lattice_tag, dual.rank)


def _check_normalization(datum: RootDatum, r: Optional[GroupAlgebraElement]) -> GroupAlgebraElement:
    if r is None:
        return _unit(datum)
    dual = datum.dual_datum()
    if r.lattice != dual.lattice_tag:
        raise LatticeMismatch(f"normalization lives on {r.lattice}, expected {dual.lattice_tag}")
    return r


def cs_value(datum: RootDatum, mu: Sequence[int], r: Optional[GroupAlgebraElement] = None) -> GroupAlgebraElement:
    mu = tuple(mu)
    if not datum.strictly_dominant(mu):
        raise NonStrictlyDominant(f"{mu} is not strictly dominant for {datum.name}")
    dual = datum.dual_datum()
    r = _check_normalization(datum, r)
    highest = tuple(a - b for a, b in zip(dual.include(mu), dual.rho_vee))
    character = weyl_character(dual, highest).element
    return (character * alt_rho(dual)) * r * delta_half(datum, mu)


def cs_value_alt(datum: RootDatum, mu: Sequence[int], r: Optional[GroupAlgebraElement] = None) -> GroupAlgebraElement:
    """
    The simplified form r * delta^{1/2}(m_mu) * alt(e^mu), mu carried into Xcal.
    """
    mu = tuple(mu)
    if not datum.strictly_dominant(mu):
        raise NonStrictlyDominant(f"{mu} is not strictly dominant for {datum.name}")
    dual = datum.dual_datum()
    r = _check_normalization(datum, r)
    element = alt(GroupAlgebraElement.monomial(dual.lattice_tag, dual.include(mu)), dual.weyl_group)
    return element * r * delta_half(datum, mu)


def cs_table(
    datum: RootDatum, points: Iterable[Sequence[int]], r: Optional[GroupAlgebraElement] = None
) -> WhittakerTable:
    r = _check_normalization(datum, r)
    return build_table(datum, "p", points, lambda mu: cs_value(datum, mu, r), r)


def conductor_O_value(
    datum: RootDatum, lam: Sequence[int], norm: Optional[GroupAlgebraElement] = None
) -> GroupAlgebraElement:
    lam = tuple(lam)
    datum.rho_vee_point()
    if not datum.dominant(lam):
        raise NonDominant(f"{lam} is not dominant for {datum.name}")
    dual = datum.dual_datum()
    norm = _check_normalization(datum, norm)
    character = weyl_character(dual, dual.include(lam)).element
    return character * norm * delta_half(datum, lam)


def conductor_O_table(
    datum: RootDatum, points: Iterable[Sequence[int]], norm: Optional[GroupAlgebraElement] = None
) -> WhittakerTable:
    norm = _check_normalization(datum, norm)
    return build_table(datum, "O", points, lambda lam: conductor_O_value(datum, lam, norm), norm)


def conductor_swap(table_O: WhittakerTable) -> WhittakerTable:
    """
    Conductor-O table -> conductor-p table with keys shifted by rho^vee.
    """
    if table_O.conductor != "O":
        raise ValueError("conductor_swap expects a conductor-O table")
    datum = table_O.datum
    rho = datum.rho_vee_point()
    values = {
        tuple(a + b for a, b in zip(key, rho)): value for key, value in table_O.values.items()
    }
    return WhittakerTable(datum, "p", values, table_O.normalization)


def adjoint_ratio(datum: RootDatum, lam: Sequence[int], r: Optional[GroupAlgebraElement] = None) -> GroupAlgebraElement:
    """
    cs_value(lambda + rho^vee) / cs_value(rho^vee); equals delta^{1/2}(m_lambda) chV_lambda.
    """
    rho = datum.rho_vee_point()
    lam = tuple(lam)
    if not datum.dominant(lam):
        raise NonDominant(f"{lam} is not dominant for {datum.name}")
    top = cs_value(datum, tuple(a + b for a, b in zip(lam, rho)), r)
    bottom = cs_value(datum, rho, r)
    return exact_divide(top, bottom)


def expected_adjoint_ratio(datum: RootDatum, lam: LatticePoint) -> GroupAlgebraElement:
    dual = datum.dual_datum()
    return weyl_character(dual, dual.include(lam)).element * delta_half(datum, lam)
