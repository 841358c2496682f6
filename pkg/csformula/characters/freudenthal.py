# csformula/characters/freudenthal.py

"""
Weight multiplicities by Freudenthal's recursion.

Kept independent of the division-based characters so the two can be
compared term by term. Candidate weights are lambda - sum_i n_i beta_i
(beta_i the simple dual roots), enumerated breadth-first inside the ball
|mu| <= |lambda| of the invariant form; multiplicities are computed for the
dominant candidates in order of depth sum(n) and spread over W-orbits.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from csformula.algebra.lattice import LatticePoint
from csformula.exceptions import NonDominant
from csformula.roots.dual import DualGroupDatum


def _shift(point: Sequence[int], root: Sequence[int], k: int) -> LatticePoint:
    return tuple(x + k * b for x, b in zip(point, root))


def _candidates(dual: DualGroupDatum, lam: LatticePoint) -> List[Tuple[Tuple[int, ...], LatticePoint]]:
    simple = dual.simple_roots
    r = len(simple)
    bound = dual.inner_product(lam, lam)
    start = (0,) * r
    seen = {start: lam}
    queue = deque([start])
    while queue:
        n = queue.popleft()
        mu = seen[n]
        for i, beta in enumerate(simple):
            m = n[:i] + (n[i] + 1,) + n[i + 1:]
            if m in seen:
                continue
            nu = _shift(mu, beta, -1)
            if dual.inner_product(nu, nu) <= bound:
                seen[m] = nu
                queue.append(m)
    return sorted(seen.items(), key=lambda item: (sum(item[0]), item[0]))


def freudenthal_multiplicities(dual: DualGroupDatum, lam: Sequence[int]) -> Dict[LatticePoint, int]:
    lam = tuple(int(x) for x in lam)
    if not dual.dominant(lam):
        raise NonDominant(f"{lam} is not dominant")
    W = dual.weyl_group
    rho = dual.rho_vee
    positive = list(zip(dual.positive_roots, dual.root_coefficients))

    def norm_shifted(x: Sequence[int]) -> Fraction:
        y = tuple(a + b for a, b in zip(x, rho))
        return dual.inner_product(y, y)

    top = norm_shifted(lam)
    dominant_mult: Dict[LatticePoint, int] = {lam: 1}

    def lookup(point: LatticePoint) -> int:
        rep, _ = W.to_dominant(point)
        return dominant_mult.get(rep, 0)

    for n, mu in _candidates(dual, lam):
        if not any(n) or not dual.dominant(mu):
            continue
        total = Fraction(0)
        for beta, coeffs in positive:
            k = 1
            while all(a - k * c >= 0 for a, c in zip(n, coeffs)):
                up = _shift(mu, beta, k)
                m = lookup(up)
                if m:
                    total += dual.inner_product(up, beta) * m
                k += 1
        value = 2 * total / (top - norm_shifted(mu))
        if value.denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity {value} at {mu}")
        if value:
            dominant_mult[mu] = int(value)

    result: Dict[LatticePoint, int] = {}
    for point, m in dominant_mult.items():
        for image in W.orbit(point):
            result[image] = m
    return dict(sorted(result.items()))
