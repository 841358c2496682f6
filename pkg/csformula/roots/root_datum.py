# csformula/roots/root_datum.py

"""
Relative root data.

This module is responsible for:
1. Building a RootDatum (X^*, Phi, X_*, Phi^vee) from a Cartan type and a
   choice of cocharacter lattice (adjoint, simply connected or an explicit
   basis), including the non-reduced types BC_n.
2. Interrogating it: positive and simple roots, dominance, rho^vee, the
   coweight lattice and the per-root multiplicities d_alpha.
3. Validating the root-datum axioms.

Coordinates. X_*(A) (x) Q is identified with Q^{r+t}: the first r axes are
the simple coroots, the last t are central directions. A cocharacter lattice
is given by a basis of that space; points are integer coordinate vectors in
that basis and roots are integer vectors of pairings with it, so the
evaluation <chi, lambda> is a dot product.

Positive roots are stored in a fixed order (height, then simple-root
coefficients) that does not depend on the lattice; `mult` and every
"alpha_index" refer to that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import TYPE_CHECKING, Dict, List, Optional, Sequence, Tuple

import numpy as np

from csformula.algebra.lattice import (
    LatticePoint,
    RationalVector,
    as_fractions,
    dot,
    inverse,
    is_integral,
    lattice_basis,
    mat_vec,
    to_int_vector,
    vec_mat,
)
from csformula.exceptions import InvalidLattice, MultNotOrbitConstant, RhoNotInLattice
from csformula.roots.cartan import cartan_matrix, is_nonreduced, parse_cartan_type
from csformula.roots.weyl import WeylGroup
from csformula.utils.logger import get_logger

if TYPE_CHECKING:
    from csformula.roots.catalog import CartanSpec
    from csformula.roots.dual import DualGroupDatum

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class RootDatum:
    name: str
    cartan_type: str
    rank: int
    semisimple_rank: int
    positive_roots: Tuple[LatticePoint, ...]
    positive_coroots: Tuple[LatticePoint, ...]
    root_coefficients: Tuple[Tuple[Fraction, ...], ...]
    coroot_coefficients: Tuple[Tuple[Fraction, ...], ...]
    simple: Tuple[int, ...]
    mult: Tuple[int, ...]
    nonreduced: bool = False
    basis: Optional[Tuple[RationalVector, ...]] = None

    # ----- lattice naming -----

    @property
    def lattice_tag(self) -> str:
        return f"cochar:{self.name}"

    @property
    def central_rank(self) -> int:
        return self.rank - self.semisimple_rank

    # ----- roots -----

    @property
    def roots(self) -> Tuple[LatticePoint, ...]:
        return self.positive_roots + tuple(tuple(-x for x in a) for a in self.positive_roots)

    @property
    def coroots(self) -> Tuple[LatticePoint, ...]:
        return self.positive_coroots + tuple(tuple(-x for x in a) for a in self.positive_coroots)

    @property
    def simple_roots(self) -> Tuple[LatticePoint, ...]:
        return tuple(self.positive_roots[i] for i in self.simple)

    @property
    def simple_coroots(self) -> Tuple[LatticePoint, ...]:
        return tuple(self.positive_coroots[i] for i in self.simple)

    def height(self, index: int) -> Fraction:
        return sum(self.root_coefficients[index], Fraction(0))

    @cached_property
    def nondivisible(self) -> Tuple[int, ...]:
        """
        Indices of positive roots alpha with alpha/2 not a root.
        """
        positives = set(self.positive_roots)
        return tuple(
            i for i, a in enumerate(self.positive_roots)
            if not (all(x % 2 == 0 for x in a) and tuple(x // 2 for x in a) in positives)
        )

    @staticmethod
    def pairing(chi: Sequence[int], lam: Sequence) -> Fraction:
        return dot(chi, lam)

    # ----- Weyl group and dominance -----

    @cached_property
    def weyl_group(self) -> WeylGroup:
        return WeylGroup(self.lattice_tag, self.simple_roots, self.simple_coroots)

    def dominant(self, lam: Sequence) -> bool:
        return all(dot(a, lam) >= 0 for a in self.simple_roots)

    def strictly_dominant(self, lam: Sequence) -> bool:
        return all(dot(a, lam) > 0 for a in self.simple_roots)

    @cached_property
    def rho_vee(self) -> RationalVector:
        """
        Half the sum of the positive coroots of non-divisible roots.
        """
        total = [Fraction(0)] * self.rank
        for i in self.nondivisible:
            for k, x in enumerate(self.positive_coroots[i]):
                total[k] += Fraction(x, 2)
        return tuple(total)

    @property
    def rho_in_lattice(self) -> bool:
        return is_integral(self.rho_vee)

    def rho_vee_point(self) -> LatticePoint:
        if not self.rho_in_lattice:
            raise RhoNotInLattice(f"rho^vee = {[str(x) for x in self.rho_vee]} is not in X_*(A) for {self.name}")
        return to_int_vector(self.rho_vee)

    # ----- lattices -----

    @cached_property
    def pairing_matrix(self) -> Tuple[Tuple[int, ...], ...]:
        """
        P[k][j] = <alpha_j, alpha_k^vee> on simple roots.
        """
        return tuple(
            tuple(int(dot(a, c)) for a in self.simple_roots) for c in self.simple_coroots
        )

    def coweight_lattice(self) -> Tuple[RationalVector, ...]:
        """
        Z-basis of Lambda^vee (the fundamental coweights), in X_*(A) coordinates.
        """
        if not self.simple:
            return ()
        weights = inverse(self.pairing_matrix)
        return tuple(
            as_fractions(vec_mat(row, [as_fractions(c) for c in self.simple_coroots]))
            for row in weights
        )

    @cached_property
    def annihilator(self) -> Tuple[LatticePoint, ...]:
        """
        Saturated Z-basis of the characters vanishing on every coroot.
        """
        from csformula.algebra.lattice import integer_kernel

        return integer_kernel(self.simple_coroots, self.rank)

    @cached_property
    def frame(self) -> Tuple[Tuple[RationalVector, ...], Tuple[LatticePoint, ...]]:
        """
        (inverse, rows) where rows = simple roots followed by the annihilator;
        a point is recovered from its simple pairings and central values.
        """
        rows = tuple(self.simple_roots) + tuple(self.annihilator)
        return inverse(rows), rows

    def point_from_pairings(self, pairings: Sequence[int], central: Sequence[int] = ()) -> Optional[LatticePoint]:
        """
        The lattice point with the given simple-root pairings and annihilator
        values, or None when no integral point has them.
        """
        inv, _ = self.frame
        values = list(pairings) + list(central or [0] * self.central_rank)
        candidate = as_fractions(mat_vec(inv, values))
        return to_int_vector(candidate) if is_integral(candidate) else None

    @cached_property
    def _dual(self) -> "DualGroupDatum":
        from csformula.roots.dual import build_dual

        return build_dual(self)

    def dual_datum(self) -> "DualGroupDatum":
        return self._dual

    def root_index(self, root: Sequence[int]) -> Tuple[int, int]:
        """
        (positive index, sign) of a root.
        """
        root = tuple(root)
        for i, a in enumerate(self.positive_roots):
            if a == root:
                return i, 1
            if tuple(-x for x in a) == root:
                return i, -1
        raise KeyError(f"{root} is not a root of {self.name}")

    # ----- validation -----

    def validate(self) -> "RootDatum":
        W = self.weyl_group
        roots = set(self.roots)
        coroots = set(self.coroots)
        for a, c in zip(self.roots, self.coroots):
            if dot(a, c) != 2:
                raise InvalidLattice(f"<{a}, {c}> != 2 in {self.name}")
        for i in range(W.num_generators):
            for a, c in zip(self.roots, self.coroots):
                if W.act_on_functional(W.generator(i), a) not in roots:
                    raise InvalidLattice(f"simple reflection {i + 1} does not permute the roots")
                if W.reflect(i, c) not in coroots:
                    raise InvalidLattice(f"simple reflection {i + 1} does not permute the coroots")
        for coeffs in self.root_coefficients:
            if any(x < 0 for x in coeffs):
                raise InvalidLattice("a positive root has a negative simple coefficient")
        self._check_mult()
        return self

    def _check_mult(self) -> None:
        W = self.weyl_group
        for idx, a in enumerate(self.positive_roots):
            for i in range(W.num_generators):
                image = W.act_on_functional(W.generator(i), a)
                j, _ = self.root_index(image)
                if self.mult[j] != self.mult[idx]:
                    raise MultNotOrbitConstant(
                        f"d for root {idx} ({self.mult[idx]}) differs from its W-translate {j} ({self.mult[j]})"
                    )

    def with_mult(self, overrides: Dict[int, int]) -> "RootDatum":
        mult = list(self.mult)
        for idx, d in overrides.items():
            if not 0 <= idx < len(mult):
                raise ValueError(f"alpha_index {idx} out of range (0..{len(mult) - 1})")
            mult[idx] = int(d)
        datum = RootDatum(
            self.name, self.cartan_type, self.rank, self.semisimple_rank,
            self.positive_roots, self.positive_coroots,
            self.root_coefficients, self.coroot_coefficients,
            self.simple, tuple(mult), self.nonreduced, self.basis,
        )
        datum._check_mult()
        return datum

    def describe(self) -> Dict:
        return {
            "name": self.name,
            "type": self.cartan_type,
            "rank": self.rank,
            "semisimple_rank": self.semisimple_rank,
            "positive_roots": [list(a) for a in self.positive_roots],
            "positive_coroots": [list(c) for c in self.positive_coroots],
            "simple": list(self.simple),
            "mult": list(self.mult),
            "nonreduced": self.nonreduced,
            "rho_vee": [str(x) for x in self.rho_vee],
            "rho_in_lattice": self.rho_in_lattice,
            "weyl_order": self.weyl_group.order,
        }


# ----------------------------------------------------------------------------
# construction from a Cartan type
# ----------------------------------------------------------------------------

def _reflect_pair(
    A: np.ndarray, i: int, root: Tuple[Fraction, ...], coroot: Tuple[Fraction, ...]
) -> Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]:
    r = len(root)
    # <alpha, alpha_i^vee> and <alpha_i, beta^vee> in simple coordinates
    a_pair = sum(root[j] * int(A[i, j]) for j in range(r))
    c_pair = sum(coroot[k] * int(A[k, i]) for k in range(r))
    new_root = tuple(root[j] - (a_pair if j == i else 0) for j in range(r))
    new_coroot = tuple(coroot[k] - (c_pair if k == i else 0) for k in range(r))
    return new_root, new_coroot


def _orbit_pairs(A: np.ndarray, seeds: Sequence[int]) -> Dict[Tuple[Fraction, ...], Tuple[Fraction, ...]]:
    r = A.shape[0]
    unit = lambda i: tuple(Fraction(int(j == i)) for j in range(r))
    found = {unit(i): unit(i) for i in seeds}
    frontier = list(found.items())
    while frontier:
        following = []
        for root, coroot in frontier:
            for i in range(r):
                new_root, new_coroot = _reflect_pair(A, i, root, coroot)
                if new_root not in found:
                    found[new_root] = new_coroot
                    following.append((new_root, new_coroot))
        frontier = following
    return found


def _lattice_rows(spec: "CartanSpec", A: np.ndarray, coroot_vectors: List[RationalVector]) -> List[RationalVector]:
    r = A.shape[0]
    lattice = spec.lattice
    if lattice == "adjoint":
        return [as_fractions(row) for row in inverse(A.tolist())]
    if lattice in ("sc", "simply_connected"):
        return list(lattice_basis(coroot_vectors, r))
    rows = [tuple(Fraction(str(x)) for x in row) for row in lattice.basis]
    n = len(rows)
    if n < r or any(len(row) != n for row in rows):
        raise InvalidLattice(f"explicit basis must be square of size >= {r}")
    return rows


def build(spec: "CartanSpec", name: Optional[str] = None) -> RootDatum:
    """
    Build and validate the root datum described by a CartanSpec.
    """
    parse_cartan_type(spec.type)
    cartan_type = spec.type.strip().upper()
    A = cartan_matrix(cartan_type)
    r = A.shape[0]
    nonreduced = is_nonreduced(cartan_type)

    pairs = {k: v for k, v in _orbit_pairs(A, range(r)).items() if all(x >= 0 for x in k)}
    if nonreduced:
        short = _orbit_pairs(A, [r - 1])
        for root, coroot in short.items():
            if all(x >= 0 for x in root):
                pairs[tuple(2 * x for x in root)] = tuple(x / 2 for x in coroot)

    root_coeffs = sorted(pairs, key=lambda c: (sum(c), tuple(-x for x in c)))
    coroot_coeffs = [pairs[c] for c in root_coeffs]

    coroot_space = [tuple(Fraction(x) for x in d) for d in coroot_coeffs]
    rows = _lattice_rows(spec, A, coroot_space)
    n = len(rows)
    pad = lambda v: tuple(v) + (Fraction(0),) * (n - r)

    try:
        basis_inverse = inverse(rows)
    except Exception as exc:
        raise InvalidLattice(f"lattice basis for {cartan_type} is singular") from exc

    positive_roots = []
    positive_coroots = []
    for c, d in zip(root_coeffs, coroot_coeffs):
        functional = pad(sum(c[j] * int(A[k, j]) for j in range(r)) for k in range(r))
        x_star = as_fractions(mat_vec(rows, functional))
        if not is_integral(x_star):
            raise InvalidLattice(f"root {c} is not integral on the {spec.lattice!r} lattice")
        y = as_fractions(vec_mat(pad(d), basis_inverse))
        if not is_integral(y):
            raise InvalidLattice(f"lattice does not contain the coroot of {c}")
        positive_roots.append(to_int_vector(x_star))
        positive_coroots.append(to_int_vector(y))

    simple = tuple(
        root_coeffs.index(tuple(Fraction(int(j == i)) for j in range(r))) for i in range(r)
    )
    mult = [1] * len(positive_roots)
    for key, d in spec.mult.items():
        idx = int(key)
        if not 0 <= idx < len(mult):
            raise ValueError(f"alpha_index {idx} out of range for {cartan_type}")
        mult[idx] = int(d)

    datum = RootDatum(
        name=name or spec.name or f"{cartan_type}-{spec.lattice if isinstance(spec.lattice, str) else 'explicit'}",
        cartan_type=cartan_type,
        rank=n,
        semisimple_rank=r,
        positive_roots=tuple(positive_roots),
        positive_coroots=tuple(positive_coroots),
        root_coefficients=tuple(tuple(Fraction(x) for x in c) for c in root_coeffs),
        coroot_coefficients=tuple(tuple(Fraction(x) for x in d) for d in coroot_coeffs),
        simple=simple,
        mult=tuple(mult),
        nonreduced=nonreduced,
        basis=tuple(rows),
    )
    logger.debug("built %s: %d positive roots, rank %d", datum.name, len(positive_roots), n)
    return datum.validate()


def from_root_system(
    name: str,
    cartan_type: str,
    positive_roots: Sequence[Sequence[int]],
    positive_coroots: Sequence[Sequence[int]],
    root_coefficients: Sequence[Sequence],
    coroot_coefficients: Sequence[Sequence],
    simple: Sequence[int],
) -> RootDatum:
    """
    Wrap already-computed roots and coroots (e.g. of a dual datum) as a RootDatum.
    """
    rank = len(positive_coroots[0]) if positive_coroots else 0
    datum = RootDatum(
        name=name,
        cartan_type=cartan_type,
        rank=rank,
        semisimple_rank=len(simple),
        positive_roots=tuple(tuple(int(x) for x in a) for a in positive_roots),
        positive_coroots=tuple(tuple(int(x) for x in c) for c in positive_coroots),
        root_coefficients=tuple(as_fractions(c) for c in root_coefficients),
        coroot_coefficients=tuple(as_fractions(c) for c in coroot_coefficients),
        simple=tuple(simple),
        mult=(1,) * len(positive_roots),
    )
    return datum.validate()
