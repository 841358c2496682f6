# csformula/whittaker/uniqueness.py

"""
Uniqueness check for conductor-p Whittaker functions on a finite box.

Unknowns are the values W(m_mu), mu in the box. Every recursion constraint
(lambda, mu) whose eta-support stays in the box contributes one linear
equation with coefficients in Q[v^{+-1}][Xcal]; the rest are dropped and
counted. The rank over the fraction field is the largest rank found over
several seeded rational specializations of v and the lattice variables, and
the reported value is the dimension of the solution space (1 when the
function is determined up to a scalar).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from csformula.algebra.lattice import LatticePoint, rank
from csformula.characters.weyl_character import weyl_character
from csformula.exceptions import EmptyConstraintSet
from csformula.roots.root_datum import RootDatum
from csformula.utils.config import get_settings
from csformula.utils.logger import get_logger
from csformula.whittaker.delta import delta_half
from csformula.whittaker.recursion import recursion_terms
from csformula.whittaker.specialize import evaluate

logger = get_logger(__name__)


@dataclass
class UniquenessReport:
    datum: str
    unknowns: int
    constraints_used: int
    constraints_dropped: int
    rank: int
    nullity: int
    trials: int
    lambdas: List[LatticePoint] = field(default_factory=list)

    def to_json(self) -> Dict:
        return {
            "datum": self.datum,
            "unknowns": self.unknowns,
            "constraints_used": self.constraints_used,
            "constraints_dropped": self.constraints_dropped,
            "rank": self.rank,
            "nullity": self.nullity,
            "trials": self.trials,
            "lambdas": [list(lam) for lam in self.lambdas],
        }


def _random_rational(rng: np.random.Generator) -> Fraction:
    num = int(rng.integers(2, 60))
    den = int(rng.integers(1, 30))
    sign = 1 if rng.integers(0, 2) else -1
    return Fraction(sign * num, den)


def _constraints(
    datum: RootDatum, box: Sequence[LatticePoint], lambdas: Sequence[LatticePoint]
) -> Tuple[List[Tuple[LatticePoint, LatticePoint, Dict[LatticePoint, int]]], int]:
    members = set(box)
    kept, dropped = [], 0
    for lam in lambdas:
        if not any(lam):
            continue
        for mu in box:
            terms = recursion_terms(datum, lam, mu)
            if all(eta in members for eta in terms):
                kept.append((lam, mu, terms))
            else:
                dropped += 1
    return kept, dropped


def uniqueness_report(
    datum: RootDatum,
    box: Sequence[Sequence[int]],
    lambdas: Sequence[Sequence[int]],
    seed: Optional[int] = None,
    trials: Optional[int] = None,
) -> UniquenessReport:
    settings = get_settings()
    seed = settings.seed if seed is None else seed
    trials = settings.rank_trials if trials is None else trials
    box = sorted({tuple(p) for p in box})
    lambdas = [tuple(lam) for lam in lambdas]
    column = {mu: k for k, mu in enumerate(box)}

    kept, dropped = _constraints(datum, box, lambdas)
    if not kept:
        raise EmptyConstraintSet(
            f"no recursion constraint fits inside the box ({len(box)} points, {dropped} dropped)"
        )

    dual = datum.dual_datum()
    characters = {lam: weyl_character(dual, dual.include(lam)).element for lam in {k[0] for k in kept}}
    rng = np.random.default_rng(seed)

    best = 0
    for _ in range(trials):
        point = [_random_rational(rng) for _ in range(dual.rank)]
        v = _random_rational(rng)
        scale = {mu: delta_half(datum, mu).inverse().evaluate(v) for mu in box}
        chars = {lam: evaluate(ch, point, v) for lam, ch in characters.items()}
        rows = []
        for lam, mu, terms in kept:
            row = [Fraction(0)] * len(box)
            row[column[mu]] += scale[mu] * chars[lam]
            for eta, c in terms.items():
                row[column[eta]] -= c * scale[eta]
            rows.append(row)
        best = max(best, rank(rows, len(box)))

    report = UniquenessReport(
        datum=datum.name,
        unknowns=len(box),
        constraints_used=len(kept),
        constraints_dropped=dropped,
        rank=best,
        nullity=len(box) - best,
        trials=trials,
        lambdas=lambdas,
    )
    logger.info(
        "uniqueness on %s: %d unknowns, %d constraints (%d dropped), nullity %d",
        datum.name, report.unknowns, report.constraints_used, dropped, report.nullity,
    )
    return report


def uniqueness_rank(
    datum: RootDatum,
    box: Sequence[Sequence[int]],
    lambdas: Sequence[Sequence[int]],
    seed: Optional[int] = None,
    trials: Optional[int] = None,
) -> int:
    return uniqueness_report(datum, box, lambdas, seed, trials).nullity
