# csformula/roots/isogeny.py

"""
Isogeny decomposition G' -> G x T.

For a root datum of G' this builds
- the adjoint datum G = G'/Z (same Cartan type, adjoint lattice, same
  multiplicities; X_*(A) of G is Lambda^vee of G'),
- the cotorus T = G'/DG', with X_*(T) the image of X_*(A') under the
  characters killing every coroot,
- pi_star: X_*(A') -> X_*(A) + X_*(T). The first block records the
  pairings with the simple roots (adjoint coordinates), the second the
  coordinates of the image in X_*(T), in an echelon basis.

`embedding` is pi_star with the X_*(T) block negated. It sends e^{mu'} to
e^{(mu, -lambda)}, the form in which the torus factor xi^{-1}(t_lambda)
enters the general-group formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Optional, Tuple

from csformula.algebra.group_algebra import GroupAlgebraElement
from csformula.algebra.lattice import (
    LatticeMap,
    LatticePoint,
    as_fractions,
    integer_row_basis,
    inverse,
    to_int_vector,
)
from csformula.exceptions import NotInImageOfRprime
from csformula.roots.root_datum import RootDatum, build
from csformula.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class IsogenyDecomposition:
    source: RootDatum
    adjoint: RootDatum
    torus_rank: int
    pi_star: LatticeMap

    @property
    def product_tag(self) -> str:
        return f"product:{self.source.name}"

    @property
    def product_rank(self) -> int:
        return self.adjoint.rank + self.torus_rank

    @cached_property
    def embedding(self) -> LatticeMap:
        r = self.adjoint.rank
        rows = tuple(
            row if k < r else tuple(-x for x in row) for k, row in enumerate(self.pi_star.matrix)
        )
        return LatticeMap(rows, self.pi_star.source_rank, self.pi_star.target_rank, injective=True)

    def split(self, point: LatticePoint) -> Tuple[LatticePoint, LatticePoint]:
        """
        (mu, lambda) with pi_star(mu') = (mu, lambda).
        """
        image = self.pi_star.apply(point)
        r = self.adjoint.rank
        return image[:r], image[r:]

    def join(self, mu: LatticePoint, lam: LatticePoint) -> Optional[LatticePoint]:
        """
        The mu' with pi_star(mu') = (mu, lam), or None off the image.
        """
        return self.pi_star.preimage(tuple(mu) + tuple(lam))

    def embed(self, element: GroupAlgebraElement) -> GroupAlgebraElement:
        """
        R' -> R'' along the twisted embedding.
        """
        return element.map_points(self.embedding.apply, lattice=self.product_tag, rank=self.product_rank)

    def pull_back(self, element: GroupAlgebraElement) -> GroupAlgebraElement:
        """
        Inverse of `embed`; raises NotInImageOfRprime off the image of R'.
        """
        terms = []
        outside = []
        for point, coeff in element.terms:
            source = self.embedding.preimage(point)
            if source is None:
                outside.append(point)
            else:
                terms.append((source, coeff))
        if outside:
            raise NotInImageOfRprime(f"exponents {outside} are not in the image of X_*(A')")
        return GroupAlgebraElement(self.source.lattice_tag, self.source.rank, terms)

    def in_image(self, element: GroupAlgebraElement) -> bool:
        return all(self.embedding.preimage(p) is not None for p in element.support())


@lru_cache(maxsize=None)
def isogeny_decomposition(datum: RootDatum) -> IsogenyDecomposition:
    n = datum.rank
    adjoint = _adjoint_of(datum)

    rows = [tuple(a) for a in datum.simple_roots]
    chars = datum.annihilator
    t = len(chars)
    if t:
        # image of each basis vector e_i in Z^t, then coordinates in an echelon basis
        images = [tuple(chi[i] for chi in chars) for i in range(n)]
        h = integer_row_basis(images)
        h_inv = inverse(h)
        for m in range(t):
            functional = as_fractions(
                sum(h_inv[k][m] * chars[k][i] for k in range(t)) for i in range(n)
            )
            rows.append(to_int_vector(functional))
    pi_star = LatticeMap(tuple(rows), n, adjoint.rank + t, injective=True)

    for coroot, target in zip(datum.positive_coroots, adjoint.positive_coroots):
        image = pi_star.apply(coroot)
        mu, lam = image[: adjoint.rank], image[adjoint.rank:]
        if tuple(mu) != tuple(target) or any(lam):
            raise ValueError(f"pi_star does not carry coroot {coroot} of {datum.name} onto {target}")

    logger.debug("isogeny decomposition of %s: torus rank %d", datum.name, t)
    return IsogenyDecomposition(source=datum, adjoint=adjoint, torus_rank=t, pi_star=pi_star)


def _adjoint_of(datum: RootDatum) -> RootDatum:
    from csformula.roots.catalog import CartanSpec

    spec = CartanSpec(
        name=f"{datum.name}/ad",
        type=datum.cartan_type,
        lattice="adjoint",
        mult={str(i): d for i, d in enumerate(datum.mult) if d != 1},
    )
    return build(spec)
