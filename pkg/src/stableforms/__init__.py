"""stableforms: exact pointwise algebra of stable 3-forms in dimensions
6 and 7, together with mod-2 characteristic-class counting on tori.

Everything is computed in exact arithmetic (rationals, one optional
quadratic radical, Gaussian rationals for Fourier coefficients); no
floating point enters any result.
"""

from . import f2, torus
from .errors import (
    DegenerateMetricError,
    DimensionError,
    EnumerationLimitError,
    NotCalibratedError,
    NullHyperplaneError,
    OrbitError,
    ScalarContextError,
    StableFormsError,
)
from .exterior import (
    Endo,
    KForm,
    Scalar,
    Signature,
    SymBilinear,
    basis_vector,
    contract,
    hodge_star,
    pullback,
    signature,
    top_coefficient,
    wedge,
)
from .geometry import (
    HyperplaneKind,
    HyperplaneSplit,
    Orbit6,
    Orbit7,
    OrientedPlane,
    calibrated_swap,
    classify6,
    classify7,
    cross_product,
    extension_admissible,
    hermitian_form,
    hitchin_dual,
    hitchin_endomorphism,
    hitchin_invariant,
    hyperplane_split,
    induced_bilinear,
    is_calibrated,
    is_positively_calibrated,
    para_eigenspaces,
    para_hermitian_form,
    plane_from_cross,
    standard_form,
)

__version__ = "0.1.0"

__all__ = [
    "DegenerateMetricError",
    "DimensionError",
    "Endo",
    "EnumerationLimitError",
    "HyperplaneKind",
    "HyperplaneSplit",
    "KForm",
    "NotCalibratedError",
    "NullHyperplaneError",
    "Orbit6",
    "Orbit7",
    "OrbitError",
    "OrientedPlane",
    "Scalar",
    "ScalarContextError",
    "Signature",
    "StableFormsError",
    "SymBilinear",
    "basis_vector",
    "calibrated_swap",
    "classify6",
    "classify7",
    "contract",
    "cross_product",
    "extension_admissible",
    "f2",
    "hermitian_form",
    "hitchin_dual",
    "hitchin_endomorphism",
    "hitchin_invariant",
    "hodge_star",
    "hyperplane_split",
    "induced_bilinear",
    "is_calibrated",
    "is_positively_calibrated",
    "para_eigenspaces",
    "para_hermitian_form",
    "plane_from_cross",
    "pullback",
    "signature",
    "standard_form",
    "top_coefficient",
    "torus",
    "wedge",
]
