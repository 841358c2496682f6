# csformula/algebra/lattice.py

"""
Integer and rational linear algebra on lattices.

This module is responsible for:
1. Integer echelon (Hermite-style) forms, used to pick a Z-basis for the
   lattice generated by a finite set of rational vectors.
2. Saturated integer kernels, used for annihilators and torus quotients.
3. Exact rational inverses and solves (sympy), used for coordinate changes.
4. LatticeMap, an integer matrix between coordinate lattices with apply and
   integral preimage.

Vectors are tuples. Integer matrices are tuples of rows. Rational entries
are fractions.Fraction throughout; sympy is only used inside the solvers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import List, Optional, Sequence, Tuple

import numpy as np
import sympy
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

LatticePoint = Tuple[int, ...]
RationalVector = Tuple[Fraction, ...]
IntMatrix = Tuple[Tuple[int, ...], ...]


# ----------------------------------------------------------------------------
# conversions
# ----------------------------------------------------------------------------

def _to_sympy(value: Fraction) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def _from_sympy(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def as_fractions(vector: Sequence) -> RationalVector:
    return tuple(Fraction(x) for x in vector)


def is_integral(vector: Sequence[Fraction]) -> bool:
    return all(Fraction(x).denominator == 1 for x in vector)


def to_int_vector(vector: Sequence[Fraction]) -> LatticePoint:
    if not is_integral(vector):
        raise ValueError(f"vector {tuple(str(x) for x in vector)} is not integral")
    return tuple(int(x) for x in vector)


def dot(u: Sequence, w: Sequence):
    return sum((a * b for a, b in zip(u, w)), 0)


# ----------------------------------------------------------------------------
# exact rational matrices
# ----------------------------------------------------------------------------

def inverse(rows: Sequence[Sequence]) -> Tuple[RationalVector, ...]:
    """
    Exact inverse of a square rational matrix.
    """
    m = sympy.Matrix([[_to_sympy(x) for x in row] for row in rows])
    inv = m.inv()
    return tuple(
        tuple(_from_sympy(inv[i, j]) for j in range(inv.cols)) for i in range(inv.rows)
    )


def rank(rows: Sequence[Sequence], ncols: Optional[int] = None) -> int:
    """
    Rank over Q of a rational matrix given as rows.
    """
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = ncols if ncols is not None else len(rows[0])
    dm = DomainMatrix(
        [[QQ(Fraction(x).numerator, Fraction(x).denominator) for x in row] for row in rows],
        (len(rows), ncols),
        QQ,
    )
    return dm.rank()


def mat_vec(rows: Sequence[Sequence], vector: Sequence) -> tuple:
    """
    rows @ vector with exact entries (numpy object arrays keep Fractions exact).
    """
    if not rows:
        return ()
    product = np.array(rows, dtype=object).dot(np.array(vector, dtype=object))
    return tuple(product.tolist())


def vec_mat(vector: Sequence, rows: Sequence[Sequence]) -> tuple:
    if not rows:
        return ()
    product = np.array(vector, dtype=object).dot(np.array(rows, dtype=object))
    return tuple(product.tolist())


def transpose(rows: Sequence[Sequence]) -> tuple:
    return tuple(zip(*rows))


# ----------------------------------------------------------------------------
# integer echelon forms
# ----------------------------------------------------------------------------

def _echelon(rows: List[List[int]], ncols: int) -> Tuple[List[List[int]], int]:
    """
    Integer row reduction on the first `ncols` columns.

    Row operations are unimodular and applied to whole rows, so any columns
    past `ncols` record the transformation. Returns (rows, rank); rows with
    index >= rank are zero on the first `ncols` columns.
    """
    rows = [list(r) for r in rows]
    pivot_row = 0
    for col in range(ncols):
        if pivot_row >= len(rows):
            break
        while True:
            live = [i for i in range(pivot_row, len(rows)) if rows[i][col] != 0]
            if not live:
                break
            best = min(live, key=lambda i: abs(rows[i][col]))
            rows[pivot_row], rows[best] = rows[best], rows[pivot_row]
            pivot = rows[pivot_row][col]
            clean = True
            for i in range(pivot_row + 1, len(rows)):
                if rows[i][col] != 0:
                    factor = rows[i][col] // pivot
                    rows[i] = [a - factor * b for a, b in zip(rows[i], rows[pivot_row])]
                    if rows[i][col] != 0:
                        clean = False
            if clean:
                break
        if rows[pivot_row][col] == 0:
            continue
        if rows[pivot_row][col] < 0:
            rows[pivot_row] = [-a for a in rows[pivot_row]]
        pivot = rows[pivot_row][col]
        for i in range(pivot_row):
            factor = rows[i][col] // pivot
            if factor:
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[pivot_row])]
        pivot_row += 1
    return rows, pivot_row


def integer_row_basis(rows: Sequence[Sequence[int]]) -> Tuple[LatticePoint, ...]:
    """
    Echelon Z-basis of the lattice spanned by integer rows.
    """
    rows = [list(int(x) for x in r) for r in rows]
    if not rows:
        return ()
    reduced, r = _echelon(rows, len(rows[0]))
    return tuple(tuple(row) for row in reduced[:r])


def lattice_basis(generators: Sequence[Sequence], dim: int) -> Tuple[RationalVector, ...]:
    """
    Z-basis of the lattice spanned by rational generators in Q^dim.
    """
    gens = [as_fractions(g) for g in generators if any(Fraction(x) != 0 for x in g)]
    if not gens:
        return ()
    denom = lcm(*(x.denominator for g in gens for x in g))
    scaled = [[int(x * denom) for x in g] for g in gens]
    basis = integer_row_basis(scaled)
    return tuple(tuple(Fraction(x, denom) for x in row) for row in basis)


def integer_kernel(rows: Sequence[Sequence[int]], ncols: int) -> Tuple[LatticePoint, ...]:
    """
    Z-basis of {x in Z^ncols : row . x = 0 for every row}.

    The result is saturated: it spans the full intersection of the rational
    kernel with Z^ncols.
    """
    rows = [list(int(x) for x in r) for r in rows]
    if not rows:
        return tuple(tuple(int(i == j) for j in range(ncols)) for i in range(ncols))
    m = len(rows)
    # rows of [M^T | I]; echelon on the M^T block leaves kernel vectors in I
    augmented = [
        [rows[i][j] for i in range(m)] + [int(j == k) for k in range(ncols)]
        for j in range(ncols)
    ]
    reduced, r = _echelon(augmented, m)
    kernel = [row[m:] for row in reduced[r:]]
    return integer_row_basis(kernel) if kernel else ()


# ----------------------------------------------------------------------------
# lattice maps
# ----------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class LatticeMap:
    """
    Integer matrix sending source coordinates to target coordinates:
    image = matrix @ point. `matrix` has target_rank rows.
    """

    matrix: IntMatrix
    source_rank: int
    target_rank: int
    injective: bool = field(default=False)

    def __post_init__(self):
        if len(self.matrix) != self.target_rank or any(
            len(row) != self.source_rank for row in self.matrix
        ):
            raise ValueError("LatticeMap matrix shape does not match its ranks")
        if self.injective and rank(self.matrix, self.source_rank) != self.source_rank:
            raise ValueError("LatticeMap flagged injective but matrix lacks full column rank")

    def apply(self, point: Sequence[int]) -> LatticePoint:
        return tuple(int(x) for x in mat_vec(self.matrix, point)) if self.target_rank else ()

    @cached_property
    def _left_inverse(self) -> Tuple[RationalVector, ...]:
        m = sympy.Matrix([[int(x) for x in row] for row in self.matrix])
        left = (m.T * m).inv() * m.T
        return tuple(
            tuple(_from_sympy(left[i, j]) for j in range(left.cols)) for i in range(left.rows)
        )

    def preimage(self, point: Sequence[int]) -> Optional[LatticePoint]:
        """
        The unique integral source point mapping to `point`, or None.
        Only meaningful for injective maps.
        """
        if self.source_rank == 0:
            return () if not any(point) else None
        candidate = as_fractions(mat_vec(self._left_inverse, point))
        if not is_integral(candidate):
            return None
        solution = tuple(int(x) for x in candidate)
        if self.apply(solution) != tuple(int(x) for x in point):
            return None
        return solution
