"""Exact workbench for finite-dimensional anticommutative algebras.

Variety membership (Lie, binary Lie, Malcev, Sagle, almost Lie, CD), operator
algebras, low-degree CD cohomology, central extensions and a fixed-degree
identity consequence engine, all over Q or GF(p) with p >= 5.
"""

from . import catalog, cohomology, identities, operators, varieties
from .algebra import Algebra, NotAnIdealError
from .exactlinalg import GF, QQ, Field, Fp, Subspace
from .varieties import Variety, satisfies, variety_report

__all__ = [
    "Algebra", "Field", "Fp", "GF", "NotAnIdealError", "QQ", "Subspace", "Variety",
    "catalog", "cohomology", "identities", "operators", "satisfies", "varieties", "variety_report",
]
