# csformula/characters/tensor.py

"""
Tensor coefficients c^eta_{mu,lambda}:

    chV_lambda * chV_{mu - rho^vee} = sum_eta c^eta chV_{eta - rho^vee}.

Computed by Brauer-Klimyk: chV_lambda * alt(e^mu) = sum_nu m_lambda(nu)
alt(e^{mu + nu}); each alt(e^xi) is straightened to sign(w) alt(e^{w xi})
with w xi strictly dominant, or dropped when xi lies on a wall.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple

from csformula.algebra.lattice import LatticePoint
from csformula.characters.weyl_character import weyl_character
from csformula.exceptions import NonDominant, NonStrictlyDominant
from csformula.roots.dual import DualGroupDatum


@dataclass(frozen=True)
class TensorCoefficients:
    lam: LatticePoint
    mu: LatticePoint
    coeffs: Dict[LatticePoint, int] = field(default_factory=dict)

    def get(self, eta: Sequence[int]) -> int:
        return self.coeffs.get(tuple(eta), 0)

    def support(self):
        return sorted(self.coeffs)

    def to_json(self) -> Dict:
        return {
            "lambda": list(self.lam),
            "mu": list(self.mu),
            "coefficients": [{"eta": list(eta), "c": c} for eta, c in sorted(self.coeffs.items())],
        }


def straighten(dual: DualGroupDatum, xi: Sequence[int]) -> Optional[Tuple[LatticePoint, int]]:
    """
    (eta, sign) with alt(e^xi) = sign * alt(e^eta), eta strictly dominant;
    None when alt(e^xi) = 0.
    """
    W = dual.weyl_group
    eta, w = W.to_dominant(xi)
    if not dual.strictly_dominant(eta):
        return None
    return eta, W.sign(w)


def tensor_coeffs(dual: DualGroupDatum, lam: Sequence[int], mu: Sequence[int]) -> TensorCoefficients:
    """
    lam is a dominant point of X_*(A) (carried into Xcal by inc), mu a
    strictly dominant point of Xcal.
    """
    lam = tuple(int(x) for x in lam)
    mu = tuple(int(x) for x in mu)
    if not dual.source.dominant(lam):
        raise NonDominant(f"{lam} is not dominant in X_*(A)")
    if not dual.strictly_dominant(mu):
        raise NonStrictlyDominant(f"{mu} is not strictly dominant in Xcal")
    return tensor_coeffs_dual(dual, dual.include(lam), mu, lam)


def tensor_coeffs_dual(
    dual: DualGroupDatum, lam_x: Sequence[int], mu: Sequence[int], label: Optional[LatticePoint] = None
) -> TensorCoefficients:
    """
    Same expansion with lambda already in Xcal.
    """
    lam_x = tuple(lam_x)
    mu = tuple(mu)
    character = weyl_character(dual, lam_x)
    coeffs: Dict[LatticePoint, int] = {}
    for nu, m in character.multiplicities().items():
        straight = straighten(dual, tuple(a + b for a, b in zip(mu, nu)))
        if straight is None:
            continue
        eta, sign = straight
        coeffs[eta] = coeffs.get(eta, 0) + sign * m
    return TensorCoefficients(
        lam=label if label is not None else lam_x,
        mu=mu,
        coeffs={eta: c for eta, c in sorted(coeffs.items()) if c},
    )
