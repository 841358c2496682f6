# csformula/roots/dual.py

"""
The dual group datum (Xcal, (Phi^nd)^vee, Ycal, Phi^nd).

Xcal = X_*(A) + Lambda^vee inside X_*(A) (x) Q, Ycal = Hom(Xcal, Z).
Points of Xcal are integer coordinates in a basis P of Xcal (rows, written in
X_*(A) coordinates); inc: X_*(A) -> Xcal is the integer matrix (P^T)^{-1}.

Roots of the dual datum are the coroots of non-divisible roots, carried into
Xcal by inc; its coroots are the non-divisible roots, as functionals in Ycal
coordinates (P . f). The dual Weyl group is generated in the same order as
the one on X_*(A), so element indices agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import TYPE_CHECKING, Sequence, Tuple

from csformula.algebra.lattice import (
    LatticeMap,
    LatticePoint,
    RationalVector,
    as_fractions,
    dot,
    inverse,
    is_integral,
    lattice_basis,
    mat_vec,
    to_int_vector,
    transpose,
)
from csformula.exceptions import InvalidLattice
from csformula.roots.weyl import WeylGroup
from csformula.utils.logger import get_logger

if TYPE_CHECKING:
    from csformula.roots.root_datum import RootDatum

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class DualGroupDatum:
    source: "RootDatum"
    basis: Tuple[RationalVector, ...]
    inc: LatticeMap
    positive_roots: Tuple[LatticePoint, ...]
    positive_coroots: Tuple[LatticePoint, ...]
    simple: Tuple[int, ...]
    rho_vee: LatticePoint

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def lattice_tag(self) -> str:
        return f"dual:{self.source.name}"

    @property
    def simple_roots(self) -> Tuple[LatticePoint, ...]:
        return tuple(self.positive_roots[i] for i in self.simple)

    @property
    def simple_coroots(self) -> Tuple[LatticePoint, ...]:
        return tuple(self.positive_coroots[i] for i in self.simple)

    @property
    def roots(self) -> Tuple[LatticePoint, ...]:
        return self.positive_roots + tuple(tuple(-x for x in a) for a in self.positive_roots)

    @property
    def coroots(self) -> Tuple[LatticePoint, ...]:
        return self.positive_coroots + tuple(tuple(-x for x in a) for a in self.positive_coroots)

    @cached_property
    def weyl_group(self) -> WeylGroup:
        return WeylGroup(self.lattice_tag, self.simple_coroots, self.simple_roots)

    @cached_property
    def root_coefficients(self) -> Tuple[Tuple[int, ...], ...]:
        """
        Coefficients of each positive dual root in the simple dual roots.
        """
        src = self.source
        return tuple(
            tuple(int(x) for x in src.coroot_coefficients[i]) for i in src.nondivisible
        )

    def dominant(self, x: Sequence[int]) -> bool:
        return all(dot(f, x) >= 0 for f in self.simple_coroots)

    def strictly_dominant(self, x: Sequence[int]) -> bool:
        return all(dot(f, x) > 0 for f in self.simple_coroots)

    def inner_product(self, x: Sequence, y: Sequence) -> Fraction:
        """
        W-invariant form sum over positive gamma of <gamma, x><gamma, y>.
        """
        return sum(
            (Fraction(dot(g, x)) * Fraction(dot(g, y)) for g in self.positive_coroots), Fraction(0)
        )

    def include(self, lam: Sequence[int]) -> LatticePoint:
        return self.inc.apply(lam)

    def restrict(self, x: Sequence[int]):
        """
        The X_*(A) point mapping to x under inc, or None.
        """
        return self.inc.preimage(x)

    def to_rational(self, x: Sequence[int]) -> RationalVector:
        """
        Xcal coordinates -> X_*(A) (x) Q coordinates.
        """
        if not self.basis:
            return ()
        return as_fractions(mat_vec(transpose(self.basis), x))

    @cached_property
    def annihilator(self) -> Tuple[LatticePoint, ...]:
        from csformula.algebra.lattice import integer_kernel

        return integer_kernel(self.simple_roots, self.rank)

    @cached_property
    def frame(self):
        rows = tuple(self.simple_coroots) + tuple(self.annihilator)
        return inverse(rows), rows

    def point_from_pairings(self, pairings: Sequence[int], central: Sequence[int] = ()):
        inv, _ = self.frame
        values = list(pairings) + list(central or [0] * len(self.annihilator))
        candidate = as_fractions(mat_vec(inv, values))
        return to_int_vector(candidate) if is_integral(candidate) else None

    def as_root_datum(self):
        """
        The dual datum as a RootDatum in its own right (Xcal as cocharacters).
        """
        from csformula.roots.root_datum import from_root_system

        src = self.source
        nd = src.nondivisible
        return from_root_system(
            name=f"{src.name}-dual",
            cartan_type=f"dual({src.cartan_type})",
            positive_roots=self.positive_coroots,
            positive_coroots=self.positive_roots,
            root_coefficients=[src.coroot_coefficients[i] for i in nd],
            coroot_coefficients=[src.root_coefficients[i] for i in nd],
            simple=self.simple,
        )

    def validate(self) -> "DualGroupDatum":
        W = self.weyl_group
        for a, c in zip(self.coroots, self.roots):
            if dot(a, c) != 2:
                raise InvalidLattice(f"dual pair {a}, {c} does not pair to 2")
        roots = set(self.roots)
        for i in range(W.num_generators):
            for x in self.roots:
                if W.reflect(i, x) not in roots:
                    raise InvalidLattice("dual simple reflection does not permute the dual roots")
        if not self.strictly_dominant(self.rho_vee):
            raise InvalidLattice("rho^vee is not strictly dominant in Xcal")
        return self


def build_dual(datum: "RootDatum") -> DualGroupDatum:
    n = datum.rank
    identity = [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    coweights = list(datum.coweight_lattice())
    if all(is_integral(w) for w in coweights):
        basis = tuple(identity)
    else:
        basis = lattice_basis(identity + coweights, n)

    # inc = (P^T)^{-1}: X_*(A) coords -> Xcal coords
    inc_rows = inverse(transpose(basis))
    if not all(is_integral(row) for row in inc_rows):
        raise InvalidLattice(f"X_*(A) is not contained in Xcal for {datum.name}")
    inc = LatticeMap(tuple(to_int_vector(row) for row in inc_rows), n, n, injective=True)

    nd = datum.nondivisible
    roots = tuple(inc.apply(datum.positive_coroots[i]) for i in nd)
    coroots = []
    for i in nd:
        f = as_fractions(mat_vec(basis, datum.positive_roots[i]))
        if not is_integral(f):
            raise InvalidLattice(f"non-divisible root {datum.positive_roots[i]} is not integral on Xcal")
        coroots.append(to_int_vector(f))
    simple = tuple(nd.index(i) for i in datum.simple)

    rho = as_fractions(mat_vec(inc_rows, datum.rho_vee))
    if not is_integral(rho):
        raise InvalidLattice(f"rho^vee is not in Xcal for {datum.name}")

    dual = DualGroupDatum(
        source=datum,
        basis=tuple(basis),
        inc=inc,
        positive_roots=roots,
        positive_coroots=tuple(coroots),
        simple=simple,
        rho_vee=to_int_vector(rho),
    )
    logger.debug("dual datum of %s: Xcal rank %d, %d positive dual roots", datum.name, n, len(roots))
    return dual.validate()
