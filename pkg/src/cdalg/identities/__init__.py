"""Free anticommutative algebra, identity parsing and consequence checking."""

from .engine import (
    BUILTINS, ConsequenceResult, ConsequenceSpace, NotHomogeneousError, check_consequence,
    consequence_space, expand, is_consequence, multilinearize, resolve,
)
from .monomials import FreeElement, canonical, monomial_basis, monomials_up_to, polarize, to_str
from .parser import IdentitySyntaxError, parse_identity

__all__ = [
    "BUILTINS", "ConsequenceResult", "ConsequenceSpace", "FreeElement", "IdentitySyntaxError",
    "NotHomogeneousError", "canonical", "check_consequence", "consequence_space", "expand",
    "is_consequence", "monomial_basis", "monomials_up_to", "multilinearize", "parse_identity",
    "polarize", "resolve", "to_str",
]
