# csformula/roots/weyl.py

"""
Finite Weyl groups, fully enumerated.

A WeylGroup is generated by simple reflections
    s_i(x) = x - <a_i, x> c_i
on a coordinate lattice, where a_i is a simple root written as a functional
and c_i the matching simple coroot. The same class serves X_*(A) and the
lattice Xcal of the dual group, which share one abstract group: both are
enumerated breadth-first with the same generator order, so element indices
agree between them.

Elements are integer numpy matrices acting on column vectors. Each element
keeps one reduced word (the first one found breadth-first), so the word
length is the Coxeter length.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

import numpy as np

from csformula.algebra.lattice import LatticePoint
from csformula.utils.logger import get_logger

logger = get_logger(__name__)


def _key(matrix: np.ndarray) -> Tuple[int, ...]:
    return tuple(int(x) for x in matrix.flatten())


class WeylGroup:
    def __init__(self, lattice: str, functionals: Sequence[Sequence[int]], vectors: Sequence[Sequence[int]]):
        if len(functionals) != len(vectors):
            raise ValueError("need one coroot per simple root")
        self.lattice = lattice
        self.rank = len(vectors[0]) if vectors else 0
        self.functionals: Tuple[LatticePoint, ...] = tuple(tuple(int(x) for x in f) for f in functionals)
        self.vectors: Tuple[LatticePoint, ...] = tuple(tuple(int(x) for x in c) for c in vectors)
        self.num_generators = len(self.functionals)

        n = self.rank
        self._gens = [
            np.eye(n, dtype=np.int64) - np.outer(np.array(c, dtype=np.int64), np.array(a, dtype=np.int64))
            for a, c in zip(self.functionals, self.vectors)
        ]
        self._matrices: List[np.ndarray] = [np.eye(n, dtype=np.int64)]
        self._words: List[Tuple[int, ...]] = [()]
        self._index: Dict[Tuple[int, ...], int] = {_key(self._matrices[0]): 0}

        frontier = [0]
        while frontier:
            following = []
            for w in frontier:
                for i, g in enumerate(self._gens):
                    m = self._matrices[w] @ g
                    k = _key(m)
                    if k not in self._index:
                        self._index[k] = len(self._matrices)
                        self._matrices.append(m)
                        self._words.append(self._words[w] + (i,))
                        following.append(self._index[k])
            frontier = following

        self.order = len(self._matrices)
        self._left = [[self._index[_key(g @ m)] for g in self._gens] for m in self._matrices]
        self._generator_index = [self._index[_key(g)] for g in self._gens]
        logger.debug("enumerated Weyl group on %s: order %d", lattice, self.order)

    # ----- structure -----

    def generator(self, i: int) -> int:
        return self._generator_index[i]

    def word(self, w: int) -> Tuple[int, ...]:
        return self._words[w]

    def length(self, w: int) -> int:
        return len(self._words[w])

    def sign(self, w: int) -> int:
        return -1 if len(self._words[w]) % 2 else 1

    def left_mult(self, i: int, w: int) -> int:
        """
        Index of s_i * w.
        """
        return self._left[w][i]

    def inverse(self, w: int) -> int:
        result = 0
        for i in self._words[w]:
            result = self.left_mult(i, result)
        return result

    def generator_classes(self) -> List[int]:
        """
        For each generator, the smallest generator index conjugate to it.
        """
        classes = list(range(self.num_generators))
        for i in range(self.num_generators):
            target = {_key(self._gens[j]): j for j in range(i)}
            for w in range(self.order):
                conj = self._matrices[w] @ self._gens[i] @ self._matrices[self.inverse(w)]
                j = target.get(_key(conj))
                if j is not None:
                    classes[i] = min(classes[i], classes[j])
        return classes

    # ----- action -----

    def act(self, w: int, point: Sequence[int]) -> LatticePoint:
        return tuple(int(x) for x in self._matrices[w].dot(np.array(point, dtype=np.int64)))

    def reflect(self, i: int, point: Sequence[int]) -> LatticePoint:
        pairing = sum(a * x for a, x in zip(self.functionals[i], point))
        return tuple(x - pairing * c for x, c in zip(point, self.vectors[i]))

    def act_on_functional(self, w: int, functional: Sequence[int]) -> LatticePoint:
        """
        (w f)(x) = f(w^{-1} x)
        """
        inv = self._matrices[self.inverse(w)]
        return tuple(int(x) for x in np.array(functional, dtype=np.int64).dot(inv))

    def pairing(self, i: int, point: Sequence[int]) -> int:
        return sum(a * x for a, x in zip(self.functionals[i], point))

    def to_dominant(self, point: Sequence[int]) -> Tuple[LatticePoint, int]:
        """
        Return (dominant, w) with dominant = w(point).
        """
        current = tuple(int(x) for x in point)
        w = 0
        moved = True
        while moved:
            moved = False
            for i in range(self.num_generators):
                if self.pairing(i, current) < 0:
                    current = self.reflect(i, current)
                    w = self.left_mult(i, w)
                    moved = True
                    break
        return current, w

    def orbit(self, point: Sequence[int]) -> List[LatticePoint]:
        return sorted({self.act(w, point) for w in range(self.order)})
