"""Stable-form geometry: model forms, orbit classification, induced
structures, hyperplane splitting, and calibrated-plane operations."""

from .calibration import (
    calibrated_swap,
    cross_product,
    is_calibrated,
    is_positively_calibrated,
    plane_from_cross,
)
from .hyperplane import HyperplaneKind, HyperplaneSplit, hyperplane_split
from .orbits import (
    Class6,
    Class7,
    Orbit6,
    Orbit7,
    classify6,
    classify7,
    extension_admissible,
    hermitian_form,
    hitchin_dual,
    hitchin_endomorphism,
    hitchin_invariant,
    induced_bilinear,
    para_eigenspaces,
    para_hermitian_form,
)
from .planes import OrientedPlane
from .standard import STANDARD_NAMES, standard_form

__all__ = [
    "Class6",
    "Class7",
    "HyperplaneKind",
    "HyperplaneSplit",
    "Orbit6",
    "Orbit7",
    "OrientedPlane",
    "STANDARD_NAMES",
    "calibrated_swap",
    "classify6",
    "classify7",
    "cross_product",
    "extension_admissible",
    "hermitian_form",
    "hitchin_dual",
    "hitchin_endomorphism",
    "hitchin_invariant",
    "hyperplane_split",
    "induced_bilinear",
    "is_calibrated",
    "is_positively_calibrated",
    "para_eigenspaces",
    "para_hermitian_form",
    "plane_from_cross",
    "standard_form",
]
