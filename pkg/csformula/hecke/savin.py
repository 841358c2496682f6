# csformula/hecke/savin.py

"""
Models of the spherical modules.

- The Iwahori-spherical module is modeled on C[X_*(A)]: theta_lambda^K is
  an element tagged "savin:<datum>", and savin_transform sends it to e^lambda.
  A_lambda acts by multiplication with chV_lambda (restricted to X_*(A)).
- The spherical Whittaker module is modeled on the basis phi_mu, mu strictly
  dominant; j(phi_mu) = alt(e^mu). project_to_whittaker is alt after the
  Savin transform, read off in that basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from csformula.algebra.group_algebra import GroupAlgebraElement, alt
from csformula.algebra.lattice import LatticePoint, rank
from csformula.algebra.scalars import LaurentScalar
from csformula.characters.tensor import tensor_coeffs
from csformula.characters.weyl_character import weyl_character
from csformula.exceptions import LatticeMismatch, NonDominant, NonStrictlyDominant
from csformula.roots.root_datum import RootDatum


def savin_tag(datum: RootDatum) -> str:
    return f"savin:{datum.name}"


def theta_K_element(datum: RootDatum, lam: Sequence[int], coeff=1) -> GroupAlgebraElement:
    return GroupAlgebraElement(savin_tag(datum), datum.rank, {tuple(lam): coeff})


def savin_transform(datum: RootDatum, h: GroupAlgebraElement) -> GroupAlgebraElement:
    """
    theta_lambda^K -> e^lambda.
    """
    if h.lattice != savin_tag(datum):
        raise LatticeMismatch(f"expected an element of {savin_tag(datum)}, got {h.lattice}")
    return h.retag(datum.lattice_tag)


def satake_character(datum: RootDatum, lam: Sequence[int]) -> GroupAlgebraElement:
    """
    chV_lambda for lambda dominant in X_*(A), as an element of C[X_*(A)].
    """
    lam = tuple(lam)
    if not datum.dominant(lam):
        raise NonDominant(f"{lam} is not dominant in X_*(A)")
    dual = datum.dual_datum()
    character = weyl_character(dual, dual.include(lam)).element
    terms = []
    for point, coeff in character.terms:
        source = dual.restrict(point)
        if source is None:
            raise LatticeMismatch(f"weight {point} of chV_{lam} is not in X_*(A)")
        terms.append((source, coeff))
    return GroupAlgebraElement(datum.lattice_tag, datum.rank, terms)


def spherical_action(datum: RootDatum, h: GroupAlgebraElement, lam: Sequence[int]) -> GroupAlgebraElement:
    """
    A_lambda . h, computed as chV_lambda * h in the Savin model.
    """
    image = savin_transform(datum, h) * satake_character(datum, lam)
    return image.retag(savin_tag(datum))


@dataclass(frozen=True)
class WhittakerModuleModel:
    datum_name: str
    lattice: str
    rank: int
    coords: Dict[LatticePoint, LaurentScalar] = field(default_factory=dict)

    def coordinate(self, mu: Sequence[int]) -> LaurentScalar:
        return self.coords.get(tuple(mu), LaurentScalar.zero())

    def is_zero(self) -> bool:
        return not self.coords

    def j(self, datum: RootDatum) -> GroupAlgebraElement:
        """
        sum_mu c_mu alt(e^mu).
        """
        W = datum.weyl_group
        total = GroupAlgebraElement.zero(self.lattice, self.rank)
        for mu, c in sorted(self.coords.items()):
            total = total + alt(GroupAlgebraElement.monomial(self.lattice, mu, c), W)
        return total

    def to_json(self) -> Dict:
        return {
            "datum": self.datum_name,
            "phi": [{"mu": list(mu), "coeff": c.to_json()} for mu, c in sorted(self.coords.items())],
        }


def _from_alternating(datum: RootDatum, element: GroupAlgebraElement) -> WhittakerModuleModel:
    coords = {
        point: coeff for point, coeff in element.terms if datum.strictly_dominant(point)
    }
    return WhittakerModuleModel(datum.name, datum.lattice_tag, datum.rank, coords)


def project_to_whittaker(datum: RootDatum, h: GroupAlgebraElement) -> WhittakerModuleModel:
    """
    Coordinates of alt(savin_transform(h)) in the basis alt(e^mu), mu strictly dominant.
    """
    return _from_alternating(datum, alt(savin_transform(datum, h), datum.weyl_group))


def twisted_kernel_element(datum: RootDatum, lam: Sequence[int], w: int) -> GroupAlgebraElement:
    """
    theta_lambda^K - (-1)^{l(w)} theta_{w lambda}^K.
    """
    W = datum.weyl_group
    return theta_K_element(datum, lam) - theta_K_element(datum, W.act(w, lam), W.sign(w))


def phi_action(datum: RootDatum, mu: Sequence[int], lam: Sequence[int]) -> WhittakerModuleModel:
    """
    phi_mu * A_lambda = sum_eta c^eta_{mu,lambda} phi_eta.
    """
    mu, lam = tuple(mu), tuple(lam)
    if not datum.strictly_dominant(mu):
        raise NonStrictlyDominant(f"{mu} is not strictly dominant")
    if not datum.dominant(lam):
        raise NonDominant(f"{lam} is not dominant")
    dual = datum.dual_datum()
    table = tensor_coeffs(dual, lam, dual.include(mu))
    coords = {}
    for eta, c in table.coeffs.items():
        source = dual.restrict(eta)
        if source is not None:
            coords[source] = LaurentScalar.constant(c)
    return WhittakerModuleModel(datum.name, datum.lattice_tag, datum.rank, coords)


def kernel_image_ranks(datum: RootDatum, box: Sequence[LatticePoint]) -> Tuple[int, int, int]:
    """
    (rank of project_to_whittaker on span(box), dimension of the span of the
    twisted-kernel generators supported in box, |box|). For a W-stable box
    the first two add up to the third.
    """
    W = datum.weyl_group
    points = sorted(set(tuple(p) for p in box))
    index = {p: k for k, p in enumerate(points)}

    targets: List[LatticePoint] = sorted(
        {q for p in points for q, _ in alt(GroupAlgebraElement.monomial(datum.lattice_tag, p), W).terms
         if datum.strictly_dominant(q)}
    )
    target_index = {p: k for k, p in enumerate(targets)}
    image_rows = []
    for p in points:
        row = [0] * len(targets)
        for q, c in project_to_whittaker(datum, theta_K_element(datum, p)).coords.items():
            row[target_index[q]] = c.coefficient(0)
        image_rows.append(row)

    kernel_rows = []
    for p in points:
        for w in range(W.order):
            wp = W.act(w, p)
            if wp not in index:
                continue
            row = [0] * len(points)
            for q, c in twisted_kernel_element(datum, p, w).terms:
                row[index[q]] += c.coefficient(0)
            if any(row):
                kernel_rows.append(row)

    image_rank = rank(image_rows, len(targets)) if targets else 0
    kernel_rank = rank(kernel_rows, len(points)) if kernel_rows else 0
    return image_rank, kernel_rank, len(points)
