# csformula/verify/sweeps.py

"""
Verification sweeps.

Each check runs one family of identities over a desk-scale set of cases on
one root datum and returns a VerificationReport. A failure entry names the
case and what went wrong; an empty `failures` list means the identities held
exactly. `run_all` runs every check in a fixed order.
"""

from __future__ import annotations

import time
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field

from csformula.algebra.group_algebra import GroupAlgebraElement, alt, is_alternating, is_symmetric
from csformula.algebra.lattice import LatticePoint, dot
from csformula.algebra.scalars import LaurentScalar
from csformula.characters.freudenthal import freudenthal_multiplicities
from csformula.characters.weyl_character import dimension, weyl_character
from csformula.exceptions import CSFormulaError
from csformula.hecke.bernstein import BernsteinElement, HeckeAlgebra, hecke_algebra
from csformula.hecke.savin import (
    kernel_image_ranks,
    phi_action,
    project_to_whittaker,
    satake_character,
    spherical_action,
    theta_K_element,
    twisted_kernel_element,
)
from csformula.roots.boxes import cube, dominant_box, dominant_generators, level_box, orbit_box, strictly_dominant_box
from csformula.roots.cartan import cartan_matrix
from csformula.roots.isogeny import isogeny_decomposition
from csformula.roots.root_datum import RootDatum
from csformula.utils.config import get_settings
from csformula.utils.logger import get_logger
from csformula.whittaker.delta import delta_half
from csformula.whittaker.formulas import (
    adjoint_ratio,
    conductor_O_table,
    conductor_swap,
    cs_table,
    cs_value,
    cs_value_alt,
    expected_adjoint_ratio,
)
from csformula.whittaker.general import general_cs_O_value, general_cs_value, pull_back_to_source
from csformula.whittaker.recursion import recursion_failures, recursion_residual, usable_pairs
from csformula.whittaker.specialize import evaluate, schur_sum
from csformula.whittaker.tables import WhittakerTable
from csformula.whittaker.uniqueness import uniqueness_report

logger = get_logger(__name__)


class VerificationReport(BaseModel):
    check: str
    datum: str
    cases: int = 0
    failures: List[Dict] = Field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures


class SweepOptions(BaseModel):
    box: int = 4
    lambda_max: int = 2
    seed: int = 0
    dim_limit: int = 500
    assoc_triples: int = 200
    rank_trials: int = 5
    specialization_points: int = 20

    @classmethod
    def from_settings(cls, **overrides) -> "SweepOptions":
        settings = get_settings()
        values = {
            "seed": settings.seed,
            "dim_limit": settings.dim_limit,
            "assoc_triples": settings.assoc_triples,
            "rank_trials": settings.rank_trials,
            "specialization_points": settings.specialization_points,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


def _lambdas(datum: RootDatum, lambda_max: int) -> List[LatticePoint]:
    return [lam for lam in dominant_box(datum, lambda_max) if any(lam)]


# ----------------------------------------------------------------------------
# characters
# ----------------------------------------------------------------------------

def _dominant_weights_up_to(dual, dim_limit: int) -> List[LatticePoint]:
    found: List[LatticePoint] = []
    level = 0
    while True:
        fresh = [
            lam for lam in dominant_box(dual, level)
            if sum(dot(f, lam) for f in dual.simple_coroots) == level
        ]
        fresh = [lam for lam in fresh if dimension(dual, lam) <= dim_limit]
        if not fresh:
            return found
        found.extend(fresh)
        level += 1


def check_characters(datum: RootDatum, options: SweepOptions) -> Tuple[int, List[Dict]]:
    dual = datum.dual_datum()
    failures = []
    weights = _dominant_weights_up_to(dual, options.dim_limit)
    for lam in weights:
        character = weyl_character(dual, lam)
        oracle = freudenthal_multiplicities(dual, lam)
        if character.multiplicities() != oracle:
            failures.append({"lambda": list(lam), "error": "division and Freudenthal disagree"})
        if character.dimension() != dimension(dual, lam):
            failures.append({"lambda": list(lam), "error": "dimension formula mismatch"})
        if not is_symmetric(character.element, dual.weyl_group):
            failures.append({"lambda": list(lam), "error": "character is not W-symmetric"})
    return len(weights), failures


# ----------------------------------------------------------------------------
# dual datum
# ----------------------------------------------------------------------------

def _dual_cartan(dual) -> List[List[int]]:
    return [[int(dot(c, a)) for a in dual.simple_roots] for c in dual.simple_coroots]


def _act_by_word(dual, word, point):
    for i in reversed(word):
        point = dual.weyl_group.reflect(i, point)
    return point


def check_dual(datum: RootDatum, options: SweepOptions) -> Tuple[int, List[Dict]]:
    failures = []
    dual = datum.dual_datum()
    cases = 0

    cases += 1
    if datum.nonreduced:
        n = datum.semisimple_rank
        expected = cartan_matrix("A1" if n == 1 else f"C{n}").tolist()
    else:
        expected = [list(row) for row in zip(*datum.pairing_matrix)]
    if _dual_cartan(dual) != expected:
        failures.append({"error": "dual Cartan matrix", "got": _dual_cartan(dual), "expected": expected})

    dual_roots = set(dual.roots)
    for i in datum.nondivisible:
        cases += 1
        if dual.include(datum.positive_coroots[i]) not in dual_roots:
            failures.append({"error": "coroot does not land on a dual root", "coroot": list(datum.positive_coroots[i])})

    if datum.central_rank == 0:
        cases += 1
        double = dual.as_root_datum().dual_datum()
        if _dual_cartan(double) != _dual_cartan(dual):
            failures.append({"error": "double dual changes the Cartan matrix"})
        functionals = np.array(double.simple_coroots, dtype=float)
        det = round(float(np.linalg.det(functionals))) if len(functionals) else 1
        if abs(det) != 1:
            failures.append({"error": "double dual is not simply connected", "det": det})

    W = datum.weyl_group
    for lam in orbit_box(datum, 2):
        for w in range(W.order):
            cases += 1
            image = _act_by_word(dual, W.word(w), dual.include(lam))
            if dual.include(W.act(w, lam)) != image:
                failures.append({"error": "inc does not commute with W", "lambda": list(lam), "w": list(W.word(w))})
        if datum.dominant(lam) and not dual.dominant(dual.include(lam)):
            failures.append({"error": "inc does not preserve dominance", "lambda": list(lam)})
    return cases, failures


# ----------------------------------------------------------------------------
# Bernstein presentation
# ----------------------------------------------------------------------------

def _random_element(algebra: HeckeAlgebra, rng: np.random.Generator, bound: int) -> BernsteinElement:
    terms = []
    for _ in range(int(rng.integers(1, 3))):
        w = int(rng.integers(0, algebra.weyl.order))
        lam = tuple(int(x) for x in rng.integers(-bound, bound + 1, size=algebra.rank))
        terms.append(((w, lam), int(rng.integers(1, 4))))
    return algebra.from_terms(terms)


def check_bernstein(datum: RootDatum, options: SweepOptions) -> Tuple[int, List[Dict]]:
    failures = []
    cases = 0
    symbolic = hecke_algebra(datum, False)
    W = symbolic.weyl
    bound = 4 if datum.rank <= 2 else 1

    for i in range(W.num_generators):
        t = symbolic.T_simple(i)
        quad = t * t
        expected = t.scale(symbolic.ring.q(i) - 1) + symbolic.scalar(symbolic.ring.q(i))
        cases += 1
        if quad != expected:
            failures.append({"error": "quadratic relation", "s": i + 1, "got": str(quad)})
        for lam in cube(datum.rank, bound):
            cases += 1
            residual = symbolic.commutation_residual(i, lam)
            if not residual.is_zero():
                failures.append({"error": "T_s commutes with theta_lam + theta_slam", "s": i + 1,
                                 "lambda": list(lam), "residual": str(residual)})

    one_k = symbolic.one_K()
    for i in range(W.num_generators):
        cases += 1
        if symbolic.T_simple(i) * one_k != one_k.scale(symbolic.ring.q(i)):
            failures.append({"error": "T_s 1_K != q(s) 1_K", "s": i + 1})
    cases += 1
    if one_k * one_k != one_k.scale(symbolic.poincare()):
        failures.append({"error": "1_K^2 != P_W(q) 1_K"})

    split = hecke_algebra(datum, True)
    rng = np.random.default_rng(options.seed)
    triples = options.assoc_triples if datum.rank <= 2 else min(options.assoc_triples, 20)
    for k in range(triples):
        a, b, c = (_random_element(split, rng, 2) for _ in range(3))
        cases += 1
        if (a * b) * c != a * (b * c):
            failures.append({"error": "associativity (split)", "triple": k, "a": str(a), "b": str(b), "c": str(c)})
    return cases, failures


# ----------------------------------------------------------------------------
# Savin model and Whittaker module
# ----------------------------------------------------------------------------

def check_savin(datum: RootDatum, options: SweepOptions) -> Tuple[int, List[Dict]]:
    failures = []
    cases = 0
    W = datum.weyl_group
    box = orbit_box(datum, 2 if datum.rank <= 2 else 1)
    for lam in box:
        for w in range(W.order):
            cases += 1
            if not project_to_whittaker(datum, twisted_kernel_element(datum, lam, w)).is_zero():
                failures.append({"error": "twisted kernel element survives", "lambda": list(lam), "w": w})
        if datum.strictly_dominant(lam):
            cases += 1
            model = project_to_whittaker(datum, theta_K_element(datum, lam))
            if model.coords != {lam: LaurentScalar.one()}:
                failures.append({"error": "theta_mu^K does not map to phi_mu", "mu": list(lam)})
            if not is_alternating(model.j(datum), W):
                failures.append({"error": "j-image not alternating", "mu": list(lam)})
    cases += 1
    image, kernel, size = kernel_image_ranks(datum, box)
    if image + kernel != size:
        failures.append({"error": "rank identity", "image": image, "kernel": kernel, "size": size})
    return cases, failures


def check_module(datum: RootDatum, options: SweepOptions) -> Tuple[int, List[Dict]]:
    failures = []
    cases = 0
    bound = min(options.box, 5) if datum.rank <= 2 else 2
    W = datum.weyl_group
    for mu in strictly_dominant_box(datum, bound):
        for lam in dominant_box(datum, options.lambda_max):
            cases += 1
            acted = project_to_whittaker(datum, spherical_action(datum, theta_K_element(datum, mu), lam))
            model = phi_action(datum, mu, lam)
            if acted.coords != model.coords:
                failures.append({"error": "phi_action disagrees with the Savin-side action",
                                 "mu": list(mu), "lambda": list(lam)})
            expected = satake_character(datum, lam) * alt(GroupAlgebraElement.monomial(datum.lattice_tag, mu), W)
            if model.j(datum) != expected:
                failures.append({"error": "j(phi_mu A_lam) != chV_lam alt(e^mu)", "mu": list(mu), "lambda": list(lam)})
    return cases, failures


# ----------------------------------------------------------------------------
# Whittaker formulas
# ----------------------------------------------------------------------------

def check_recursion(datum: RootDatum, options: SweepOptions) -> Tuple[int, List[Dict]]:
    table = cs_table(datum, level_box(datum, options.box))
    lambdas = _lambdas(datum, options.lambda_max)
    cases, failures = recursion_failures(datum, table, lambdas)

    for mu in table.keys():
        cases += 1
        if cs_value(datum, mu) != cs_value_alt(datum, mu):
            failures.append({"error": "cs_value differs from delta * alt(e^mu)", "mu": list(mu)})

    pairs, _ = usable_pairs(datum, table, lambdas)
    if pairs:
        lam, mu = pairs[0]
        cases += 1
        perturbed = table.perturbed(mu)
        if recursion_residual(datum, lam, mu, perturbed).is_zero():
            failures.append({"error": "perturbed table not detected", "mu": list(mu), "lambda": list(lam)})
    return cases, failures


def check_adjoint(datum: RootDatum, options: SweepOptions) -> Tuple[int, List[Dict]]:
    if not datum.rho_in_lattice:
        logger.warning("adjoint check skipped: rho^vee is not in X_*(A) for %s", datum.name)
        return 0, []
    failures = []
    cases = 0
    for lam in dominant_box(datum, options.lambda_max):
        cases += 1
        if adjoint_ratio(datum, lam) != expected_adjoint_ratio(datum, lam):
            failures.append({"error": "adjoint ratio", "lambda": list(lam)})

    swapped = conductor_swap(conductor_O_table(datum, dominant_box(datum, options.box)))
    more, swap_failures = recursion_failures(datum, swapped, _lambdas(datum, options.lambda_max))
    failures.extend({"error": "conductor swap recursion", **f} for f in swap_failures)
    return cases + more, failures


def _uniqueness_lambdas(datum: RootDatum, lambda_max: int) -> List[LatticePoint]:
    lambdas = dominant_generators(datum)
    units = [tuple(int(i == j) for j in range(datum.semisimple_rank)) for i in range(datum.semisimple_rank)]
    if all(datum.point_from_pairings(unit) is not None for unit in units):
        return lambdas
    return lambdas + [lam for lam in _lambdas(datum, lambda_max) if lam not in lambdas]


def check_uniqueness(datum: RootDatum, options: SweepOptions) -> Tuple[int, List[Dict]]:
    box = level_box(datum, options.box)
    report = uniqueness_report(
        datum, box, _uniqueness_lambdas(datum, options.lambda_max), seed=options.seed, trials=options.rank_trials
    )
    failures = [] if report.nullity == 1 else [{"error": "solution space is not one-dimensional", **report.to_json()}]
    return report.constraints_used, failures


def check_general(datum: RootDatum, options: SweepOptions) -> Tuple[int, List[Dict]]:
    dec = isogeny_decomposition(datum)
    failures = []
    cases = 0
    bound = 6 if datum.semisimple_rank == 1 else min(options.box, 3)
    central = 1 if datum.central_rank else 0
    points = strictly_dominant_box(datum, bound, central)
    values = {}
    for mu in points:
        cases += 1
        try:
            values[mu] = pull_back_to_source(dec, general_cs_value(dec, mu))
        except CSFormulaError as exc:
            failures.append({"error": str(exc), "mu": list(mu)})
    for lam in dominant_box(datum, options.lambda_max, central):
        cases += 1
        try:
            general_cs_O_value(dec, lam)
        except CSFormulaError as exc:
            failures.append({"error": str(exc), "lambda": list(lam)})

    if values:
        table = WhittakerTable(datum, "p", values)
        more, recursion = recursion_failures(datum, table, _lambdas(datum, options.lambda_max))
        cases += more
        failures.extend({"error": "intrinsic recursion on the source datum", **f} for f in recursion)
    return cases, failures


def check_split(datum: RootDatum, options: SweepOptions) -> Tuple[int, List[Dict]]:
    if not datum.rho_in_lattice:
        logger.warning("split check skipped: rho^vee is not in X_*(A) for %s", datum.name)
        return 0, []
    failures = []
    cases = 0
    dual = datum.dual_datum()
    rng = np.random.default_rng(options.seed)
    lambdas = dominant_box(datum, options.lambda_max)
    rank_one = datum.semisimple_rank == 1 and datum.rank == 1 and all(d == 1 for d in datum.mult)
    for k in range(options.specialization_points):
        t = Fraction(int(rng.integers(2, 40)), int(rng.integers(1, 20)))
        point = [Fraction(int(rng.integers(1, 30)) * (1 if rng.integers(0, 2) else -1), int(rng.integers(1, 15)))
                 for _ in range(dual.rank)]
        for lam in lambdas:
            cases += 1
            got = evaluate(adjoint_ratio(datum, lam), point, t)
            if rank_one:
                # closed form for the split rank-one case: v^{-lambda} * sum z^{lambda - 2k}
                expected = t ** (-lam[0]) * schur_sum(point[0], lam[0])
            else:
                mults = freudenthal_multiplicities(dual, dual.include(lam))
                expected = delta_half(datum, lam).evaluate(t) * sum(
                    (m * _monomial(point, nu) for nu, m in mults.items()), Fraction(0)
                )
            if got != expected:
                failures.append({"error": "specialized ratio", "lambda": list(lam), "point": k,
                                 "got": str(got), "expected": str(expected)})
    return cases, failures


def _monomial(point, exponent) -> Fraction:
    value = Fraction(1)
    for z, e in zip(point, exponent):
        value *= z ** e
    return value


CHECKS: Dict[str, Callable[[RootDatum, SweepOptions], Tuple[int, List[Dict]]]] = {
    "characters": check_characters,
    "dual": check_dual,
    "bernstein": check_bernstein,
    "savin": check_savin,
    "module": check_module,
    "recursion": check_recursion,
    "adjoint": check_adjoint,
    "uniqueness": check_uniqueness,
    "general": check_general,
    "split": check_split,
}


def run_check(name: str, datum: RootDatum, options: Optional[SweepOptions] = None, timings: bool = True) -> VerificationReport:
    if name not in CHECKS:
        raise ValueError(f"unknown check '{name}'; choose from {', '.join(CHECKS)} or 'all'")
    options = options or SweepOptions.from_settings()
    start = time.perf_counter()
    cases, failures = CHECKS[name](datum, options)
    elapsed = int((time.perf_counter() - start) * 1000) if timings else 0
    logger.info("check %s on %s: %d cases, %d failures", name, datum.name, cases, len(failures))
    return VerificationReport(check=name, datum=datum.name, cases=cases, failures=failures, elapsed_ms=elapsed)


def run_all(datum: RootDatum, options: Optional[SweepOptions] = None, timings: bool = True) -> List[VerificationReport]:
    return [run_check(name, datum, options, timings) for name in CHECKS]
