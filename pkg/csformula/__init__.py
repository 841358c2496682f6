"""
csformula: exact computations around the Casselman-Shalika formula.

Root data and dual groups live in `csformula.roots`, characters in
`csformula.characters`, the Iwahori-Hecke algebra in `csformula.hecke`, and
Whittaker values with their recursions in `csformula.whittaker`.
"""

from csformula.exceptions import CSFormulaError
from csformula.roots import RootDatum, resolve_datum

__version__ = "0.1.0"

__all__ = ["CSFormulaError", "RootDatum", "resolve_datum", "__version__"]
