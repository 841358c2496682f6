from csformula.whittaker.delta import delta_half
from csformula.whittaker.formulas import (
    adjoint_ratio,
    conductor_O_table,
    conductor_O_value,
    conductor_swap,
    cs_table,
    cs_value,
    cs_value_alt,
)
from csformula.whittaker.general import (
    general_cs_O_value,
    general_cs_value,
    pull_back_to_source,
    reduce_to_product,
    torus_factor,
)
from csformula.whittaker.recursion import recursion_failures, recursion_residual
from csformula.whittaker.specialize import SatakeSpecialization, schur_sum, specialize
from csformula.whittaker.tables import WhittakerTable, build_table
from csformula.whittaker.uniqueness import UniquenessReport, uniqueness_rank, uniqueness_report

__all__ = [
    "SatakeSpecialization",
    "UniquenessReport",
    "WhittakerTable",
    "adjoint_ratio",
    "build_table",
    "conductor_O_table",
    "conductor_O_value",
    "conductor_swap",
    "cs_table",
    "cs_value",
    "cs_value_alt",
    "delta_half",
    "general_cs_O_value",
    "general_cs_value",
    "pull_back_to_source",
    "recursion_failures",
    "recursion_residual",
    "reduce_to_product",
    "schur_sum",
    "specialize",
    "torus_factor",
    "uniqueness_rank",
    "uniqueness_report",
]
