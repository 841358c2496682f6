from csformula.characters.freudenthal import freudenthal_multiplicities
from csformula.characters.tensor import TensorCoefficients, straighten, tensor_coeffs
from csformula.characters.weyl_character import Character, dimension, weyl_character

__all__ = [
    "Character",
    "TensorCoefficients",
    "dimension",
    "freudenthal_multiplicities",
    "straighten",
    "tensor_coeffs",
    "weyl_character",
]
