# csformula/roots/boxes.py

"""
Finite sets of lattice points used by the sweeps and checks.

Every box is described through simple-root pairings (plus values of the
central characters), then solved back to lattice points; points that are not
integral are skipped. The helpers accept a RootDatum (points of X_*(A)) or a
DualGroupDatum (points of Xcal), both of which expose `point_from_pairings`.
"""

from __future__ import annotations

from itertools import product
from typing import List, Sequence

from csformula.algebra.lattice import LatticePoint


def _sizes(datum) -> tuple:
    return len(datum.simple), len(datum.annihilator)


def _collect(datum, pairing_ranges: Sequence[Sequence[int]], central_bound: int) -> List[LatticePoint]:
    r, t = _sizes(datum)
    central = [range(-central_bound, central_bound + 1)] * t
    points = set()
    for pairings in product(*pairing_ranges):
        for values in product(*central):
            point = datum.point_from_pairings(pairings, values)
            if point is not None:
                points.add(point)
    return sorted(points)


def dominant_box(datum, bound: int, central_bound: int = 0) -> List[LatticePoint]:
    """
    Dominant points with every simple pairing in [0, bound].
    """
    r, _ = _sizes(datum)
    return _collect(datum, [range(0, bound + 1)] * r, central_bound)


def strictly_dominant_box(datum, bound: int, central_bound: int = 0) -> List[LatticePoint]:
    """
    Strictly dominant points with every simple pairing in [1, bound].
    """
    r, _ = _sizes(datum)
    return _collect(datum, [range(1, bound + 1)] * r, central_bound)


def level_box(datum, level: int, central_bound: int = 0) -> List[LatticePoint]:
    """
    Strictly dominant points mu with sum_i (<alpha_i, mu> - 1) <= level.
    """
    r, _ = _sizes(datum)
    ranges = [range(1, level + 2)] * r
    return [
        p for p in _collect(datum, ranges, central_bound)
        if sum(_pairings(datum, p)) - r <= level
    ]


def dominant_generators(datum) -> List[LatticePoint]:
    """
    Generators of the monoid of dominant points with zero central values.

    The monoid is simplicial over the rays k_i * omega_i, k_i the least
    positive multiple of the i-th fundamental coweight in the lattice, so its
    irreducible elements have i-th pairing at most k_i.
    """
    r, _ = _sizes(datum)
    steps = []
    for i in range(r):
        k = 1
        while datum.point_from_pairings(tuple(k * int(i == j) for j in range(r))) is None:
            k += 1
        steps.append(k)
    candidates = {p: tuple(_pairings(datum, p)) for p in _collect(datum, [range(0, k + 1) for k in steps], 0)}
    shapes = {c for c in candidates.values() if any(c)}

    def reducible(c) -> bool:
        return any(
            s != c and all(x <= y for x, y in zip(s, c)) and tuple(y - x for x, y in zip(s, c)) in shapes
            for s in shapes
        )

    return sorted(p for p, c in candidates.items() if any(c) and not reducible(c))


def orbit_box(datum, bound: int, central_bound: int = 0) -> List[LatticePoint]:
    """
    Union of the W-orbits of dominant_box(bound): a W-stable finite set.
    """
    W = datum.weyl_group
    points = set()
    for p in dominant_box(datum, bound, central_bound):
        points.update(W.orbit(p))
    return sorted(points)


def cube(rank: int, bound: int) -> List[LatticePoint]:
    """
    All integer vectors with |coordinate| <= bound.
    """
    return [tuple(p) for p in product(range(-bound, bound + 1), repeat=rank)]


def _pairings(datum, point: Sequence[int]) -> List[int]:
    _, rows = datum.frame
    r = len(datum.simple)
    return [int(sum(a * x for a, x in zip(rows[i], point))) for i in range(r)]
