from csformula.algebra.group_algebra import (
    GroupAlgebraElement,
    add,
    alt,
    exact_divide,
    is_alternating,
    is_symmetric,
    mul,
    weyl_act,
)
from csformula.algebra.lattice import LatticeMap
from csformula.algebra.scalars import LaurentScalar

__all__ = [
    "GroupAlgebraElement",
    "LatticeMap",
    "LaurentScalar",
    "add",
    "alt",
    "exact_divide",
    "is_alternating",
    "is_symmetric",
    "mul",
    "weyl_act",
]
