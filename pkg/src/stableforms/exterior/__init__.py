"""Exact multilinear algebra: scalars, forms, wedge/contract/pullback,
Hodge duality, and signatures."""

from . import linalg
from .bilinear import Endo, Signature, SymBilinear, signature
from .forms import (
    KForm,
    basis_vector,
    contract,
    hodge_star,
    pullback,
    top_coefficient,
    wedge,
)
from .scalar import Scalar, square_free_split

__all__ = [
    "Endo",
    "KForm",
    "Scalar",
    "Signature",
    "SymBilinear",
    "basis_vector",
    "contract",
    "hodge_star",
    "linalg",
    "pullback",
    "signature",
    "square_free_split",
    "top_coefficient",
    "wedge",
]
