# csformula/whittaker/tables.py

"""
WhittakerTable: the values mu -> W(m_mu) of one spherical Whittaker function.

Conductor "p" tables are indexed by strictly dominant cocharacters, conductor
"O" tables by dominant ones. Values are group-algebra elements (over Xcal,
X_*(A) or the product lattice R''); `normalization` records r.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Literal, Optional, Sequence

from csformula.algebra.group_algebra import GroupAlgebraElement
from csformula.algebra.lattice import LatticePoint
from csformula.algebra.scalars import LaurentScalar
from csformula.exceptions import MissingTableEntry, NonDominant, NonStrictlyDominant
from csformula.roots.root_datum import RootDatum

Conductor = Literal["p", "O"]


@dataclass(frozen=True, eq=False)
class WhittakerTable:
    datum: RootDatum
    conductor: Conductor
    values: Dict[LatticePoint, GroupAlgebraElement] = field(default_factory=dict)
    normalization: Optional[GroupAlgebraElement] = None

    def __post_init__(self):
        if self.conductor not in ("p", "O"):
            raise ValueError(f"conductor must be 'p' or 'O', got {self.conductor!r}")
        for key in self.values:
            if self.conductor == "p" and not self.datum.strictly_dominant(key):
                raise NonStrictlyDominant(f"conductor-p table key {key} is not strictly dominant")
            if self.conductor == "O" and not self.datum.dominant(key):
                raise NonDominant(f"conductor-O table key {key} is not dominant")

    def __contains__(self, mu: Sequence[int]) -> bool:
        return tuple(mu) in self.values

    def __len__(self) -> int:
        return len(self.values)

    def get(self, mu: Sequence[int]) -> GroupAlgebraElement:
        mu = tuple(mu)
        if mu not in self.values:
            raise MissingTableEntry([mu])
        return self.values[mu]

    def require(self, keys: Iterable[Sequence[int]]) -> None:
        missing = sorted({tuple(k) for k in keys if tuple(k) not in self.values})
        if missing:
            raise MissingTableEntry(missing)

    def keys(self) -> List[LatticePoint]:
        return sorted(self.values)

    def with_value(self, mu: Sequence[int], value: GroupAlgebraElement) -> "WhittakerTable":
        values = dict(self.values)
        values[tuple(mu)] = value
        return WhittakerTable(self.datum, self.conductor, values, self.normalization)

    def perturbed(self, mu: Sequence[int], factor: LaurentScalar = LaurentScalar.v_power(1)) -> "WhittakerTable":
        """
        Copy with the value at mu multiplied by `factor` (v by default).
        """
        return self.with_value(mu, self.get(mu) * factor)

    def to_json(self) -> Dict:
        return {
            "datum": self.datum.name,
            "conductor": self.conductor,
            "values": [{"mu": list(k), "value": v.to_json()} for k, v in sorted(self.values.items())],
        }


def build_table(
    datum: RootDatum,
    conductor: Conductor,
    points: Iterable[Sequence[int]],
    fn: Callable[[LatticePoint], GroupAlgebraElement],
    normalization: Optional[GroupAlgebraElement] = None,
) -> WhittakerTable:
    return WhittakerTable(
        datum, conductor, {tuple(p): fn(tuple(p)) for p in points}, normalization
    )
