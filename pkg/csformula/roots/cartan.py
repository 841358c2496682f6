# csformula/roots/cartan.py

"""
Cartan matrices of the catalog types.

Convention: cartan[i, j] = <alpha_j, alpha_i^vee>, i.e. row i is the i-th
simple coroot and column j the j-th simple root. For B_n the last simple
root is short, for C_n it is long, for G2 the first simple root is short.

BC_n uses the B_n matrix; the divisible roots 2*alpha (alpha short) are added
by the root datum builder.
"""

from __future__ import annotations

import re
from typing import Tuple

import numpy as np

from csformula.exceptions import InvalidCartanType

SUPPORTED_RANKS = {
    "A": range(1, 5),
    "B": range(2, 5),
    "C": range(2, 5),
    "D": range(3, 5),
    "G": range(2, 3),
    "BC": range(1, 3),
}

TYPE_PATTERN = re.compile(r"^(BC|A|B|C|D|G)(\d+)$")


def parse_cartan_type(name: str) -> Tuple[str, int]:
    match = TYPE_PATTERN.match(name.strip().upper())
    if not match:
        raise InvalidCartanType(f"unknown Cartan type '{name}'")
    series, rank = match.group(1), int(match.group(2))
    if rank not in SUPPORTED_RANKS[series]:
        raise InvalidCartanType(f"type {series}{rank} is outside the supported catalog")
    return series, rank


def cartan_matrix(name: str) -> np.ndarray:
    series, rank = parse_cartan_type(name)
    if series == "BC":
        series = "B"
        if rank == 1:
            return np.array([[2]], dtype=int)

    A = 2 * np.eye(rank, dtype=int)
    if series == "A":
        A[range(rank - 1), range(1, rank)] = -1
        A[range(1, rank), range(rank - 1)] = -1
    elif series == "B":
        A[range(rank - 2), range(1, rank - 1)] = -1
        A[range(1, rank - 1), range(rank - 2)] = -1
        # last simple root is short
        A[-2, -1] = -1
        A[-1, -2] = -2
    elif series == "C":
        A[range(rank - 2), range(1, rank - 1)] = -1
        A[range(1, rank - 1), range(rank - 2)] = -1
        # last simple root is long
        A[-2, -1] = -2
        A[-1, -2] = -1
    elif series == "D":
        A[range(rank - 2), range(1, rank - 1)] = -1
        A[range(1, rank - 1), range(rank - 2)] = -1
        A[-3, -1] = -1
        A[-1, -3] = -1
    elif series == "G":
        A[0, 1] = -3
        A[1, 0] = -1
    return A


def is_nonreduced(name: str) -> bool:
    return parse_cartan_type(name)[0] == "BC"
