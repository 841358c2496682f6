# csformula/roots/catalog.py

"""
Catalog of root data.

This module is responsible for:
1. The CartanSpec model (the JSON shape of one root-datum description).
2. Loading data/catalog/root_data.json.
3. Resolving datum references ("catalog:NAME" or "file:PATH") to built,
   validated RootDatum instances, with optional multiplicity overrides.

Resolved data are cached, so repeated lookups return the same instance and
share its Weyl group and character caches.
"""

from __future__ import annotations

import json
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field, ValidationError, field_validator

from csformula.roots.root_datum import RootDatum, build
from csformula.utils.config import get_settings
from csformula.utils.logger import get_logger

logger = get_logger(__name__)


class ExplicitLattice(BaseModel):
    basis: List[List[Union[int, str]]]

    @field_validator("basis")
    @classmethod
    def _square(cls, rows: List[List[Union[int, str]]]) -> List[List[Union[int, str]]]:
        if not rows or any(len(row) != len(rows) for row in rows):
            raise ValueError("explicit lattice basis must be a non-empty square matrix")
        return rows


class CartanSpec(BaseModel):
    name: Optional[str] = None
    type: str
    lattice: Union[Literal["adjoint", "sc", "simply_connected"], ExplicitLattice] = "adjoint"
    mult: Dict[str, int] = Field(default_factory=dict)
    description: Optional[str] = None

    @field_validator("mult")
    @classmethod
    def _positive(cls, mult: Dict[str, int]) -> Dict[str, int]:
        for key, d in mult.items():
            if not key.lstrip("-").isdigit():
                raise ValueError(f"mult key '{key}' is not an alpha_index")
            if d <= 0:
                raise ValueError(f"d_alpha must be positive, got {d} for alpha_index {key}")
        return mult


def catalog_path() -> Path:
    return get_settings().catalog_dir / "root_data.json"


def load_catalog(path: Optional[Path] = None) -> List[CartanSpec]:
    """
    Read and validate every entry of the catalog file.
    """
    path = Path(path) if path is not None else catalog_path()
    if not path.exists():
        raise FileNotFoundError(f"Catalog file not found at: {path}")

    with path.open("r", encoding="utf-8") as f:
        data = json.load(f)

    if isinstance(data, dict) and "data" in data:
        entries = data["data"]
    elif isinstance(data, list):
        entries = data
    else:
        raise ValueError("Unexpected catalog format. Expected {'version': 1, 'data': [...]} or a list.")

    try:
        return [CartanSpec.model_validate(entry) for entry in entries]
    except ValidationError as exc:
        raise ValueError(f"invalid catalog entry in {path}: {exc}") from exc


def catalog_names() -> List[str]:
    return [spec.name for spec in load_catalog() if spec.name]


def find_spec(name: str) -> Optional[CartanSpec]:
    for spec in load_catalog():
        if spec.name == name:
            return spec
    return None


def _read_spec_file(path: str) -> CartanSpec:
    file_path = Path(path)
    if not file_path.exists():
        raise FileNotFoundError(f"Datum file not found at: {file_path}")
    with file_path.open("r", encoding="utf-8") as f:
        try:
            return CartanSpec.model_validate(json.load(f))
        except ValidationError as exc:
            raise ValueError(f"invalid CartanSpec in {file_path}: {exc}") from exc


@lru_cache(maxsize=64)
def _resolve(ref: str, overrides: Tuple[Tuple[int, int], ...]) -> RootDatum:
    if ref.startswith("catalog:"):
        name = ref[len("catalog:"):]
        spec = find_spec(name)
        if spec is None:
            raise ValueError(f"no catalog entry named '{name}'")
    elif ref.startswith("file:"):
        spec = _read_spec_file(ref[len("file:"):])
    else:
        raise ValueError(f"datum reference must start with 'catalog:' or 'file:', got '{ref}'")

    datum = build(spec)
    if overrides:
        datum = datum.with_mult(dict(overrides))
    logger.debug("resolved %s (overrides %s)", ref, overrides)
    return datum


def resolve_datum(ref: Optional[str] = None, mult: Optional[Dict[int, int]] = None) -> RootDatum:
    """
    Resolve "catalog:NAME" or "file:PATH" to a RootDatum.
    `mult` maps alpha_index -> d_alpha and must stay W-orbit constant.
    """
    ref = ref or get_settings().default_datum
    overrides = tuple(sorted((int(k), int(v)) for k, v in (mult or {}).items()))
    return _resolve(ref, overrides)


def load_datum(name: str) -> RootDatum:
    return resolve_datum(f"catalog:{name}")
