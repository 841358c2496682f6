from csformula.hecke.bernstein import BernsteinElement, HeckeAlgebra, hecke_algebra
from csformula.hecke.parameters import Param, ParameterRing, poincare_polynomial
from csformula.hecke.savin import (
    WhittakerModuleModel,
    kernel_image_ranks,
    phi_action,
    project_to_whittaker,
    satake_character,
    savin_transform,
    spherical_action,
    theta_K_element,
    twisted_kernel_element,
)
from csformula.hecke.term_language import format_element, parse_element

__all__ = [
    "BernsteinElement",
    "HeckeAlgebra",
    "Param",
    "ParameterRing",
    "WhittakerModuleModel",
    "format_element",
    "hecke_algebra",
    "kernel_image_ranks",
    "parse_element",
    "phi_action",
    "poincare_polynomial",
    "project_to_whittaker",
    "satake_character",
    "savin_transform",
    "spherical_action",
    "theta_K_element",
    "twisted_kernel_element",
]
