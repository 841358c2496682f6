# csformula/whittaker/recursion.py

"""
The Whittaker recursion

    delta^{-1/2}(m_mu) chV_lambda W(m_mu) = sum_eta c^eta_{mu,lambda} delta^{-1/2}(m_eta) W(m_eta)

checked as an exact identity on a table. Table values on X_*(A) are carried
into Xcal before multiplying by characters.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Sequence, Tuple

from csformula.algebra.group_algebra import GroupAlgebraElement
from csformula.characters.tensor import tensor_coeffs
from csformula.characters.weyl_character import weyl_character
from csformula.exceptions import LatticeMismatch, NonDominant, NonStrictlyDominant
from csformula.roots.root_datum import RootDatum
from csformula.utils.logger import get_logger
from csformula.whittaker.delta import delta_half
from csformula.whittaker.tables import WhittakerTable

logger = get_logger(__name__)


def lift_to_dual(datum: RootDatum, value: GroupAlgebraElement) -> GroupAlgebraElement:
    dual = datum.dual_datum()
    if value.lattice == dual.lattice_tag:
        return value
    if value.lattice == datum.lattice_tag:
        return value.map_points(dual.include, lattice=dual.lattice_tag, rank=dual.rank)
    raise LatticeMismatch(f"table value on {value.lattice} cannot be read on {dual.lattice_tag}")


def recursion_terms(datum: RootDatum, lam: Sequence[int], mu: Sequence[int]) -> Dict[tuple, int]:
    """
    eta -> c^eta_{mu,lambda}, with eta in X_*(A) coordinates.
    """
    dual = datum.dual_datum()
    coeffs = tensor_coeffs(dual, lam, dual.include(mu)).coeffs
    out = {}
    for eta, c in coeffs.items():
        source = dual.restrict(eta)
        if source is None:
            raise LatticeMismatch(f"eta = {eta} is not in X_*(A)")
        out[source] = c
    return out


def recursion_residual(
    datum: RootDatum, lam: Sequence[int], mu: Sequence[int], table: WhittakerTable
) -> GroupAlgebraElement:
    lam, mu = tuple(lam), tuple(mu)
    if not datum.dominant(lam):
        raise NonDominant(f"lambda = {lam} is not dominant")
    if not datum.strictly_dominant(mu):
        raise NonStrictlyDominant(f"mu = {mu} is not strictly dominant")
    dual = datum.dual_datum()
    terms = recursion_terms(datum, lam, mu)
    table.require([mu] + list(terms))

    character = weyl_character(dual, dual.include(lam)).element
    lhs = character * lift_to_dual(datum, table.get(mu)) * delta_half(datum, mu).inverse()
    rhs = GroupAlgebraElement.zero(dual.lattice_tag, dual.rank)
    for eta, c in sorted(terms.items()):
        rhs = rhs + lift_to_dual(datum, table.get(eta)) * (delta_half(datum, eta).inverse() * c)
    return lhs - rhs


def usable_pairs(
    datum: RootDatum, table: WhittakerTable, lambdas: Iterable[Sequence[int]]
) -> Tuple[List[Tuple[tuple, tuple]], int]:
    """
    (lambda, mu) pairs whose eta-support lies inside the table, and the
    number of pairs skipped because it does not.
    """
    pairs, skipped = [], 0
    for lam in lambdas:
        for mu in table.keys():
            terms = recursion_terms(datum, lam, mu)
            if all(eta in table for eta in terms):
                pairs.append((tuple(lam), mu))
            else:
                skipped += 1
    return pairs, skipped


def recursion_failures(
    datum: RootDatum, table: WhittakerTable, lambdas: Iterable[Sequence[int]]
) -> Tuple[int, List[Dict]]:
    """
    Run recursion_residual over every usable pair; returns (cases, failures).
    """
    pairs, skipped = usable_pairs(datum, table, lambdas)
    failures = []
    for lam, mu in pairs:
        residual = recursion_residual(datum, lam, mu, table)
        if not residual.is_zero():
            failures.append({"lambda": list(lam), "mu": list(mu), "residual": str(residual)})
    logger.debug("recursion on %s: %d pairs, %d skipped, %d failures", datum.name, len(pairs), skipped, len(failures))
    return len(pairs), failures
