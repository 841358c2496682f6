from csformula.roots.catalog import CartanSpec, load_catalog, load_datum, resolve_datum
from csformula.roots.dual import DualGroupDatum
from csformula.roots.isogeny import IsogenyDecomposition, isogeny_decomposition
from csformula.roots.root_datum import RootDatum, build
from csformula.roots.weyl import WeylGroup

__all__ = [
    "CartanSpec",
    "DualGroupDatum",
    "IsogenyDecomposition",
    "RootDatum",
    "WeylGroup",
    "build",
    "isogeny_decomposition",
    "load_catalog",
    "load_datum",
    "resolve_datum",
]
