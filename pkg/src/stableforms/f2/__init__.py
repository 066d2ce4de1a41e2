"""Mod-2 linear algebra, finite-field counting, and the exterior-algebra
model of the torus cohomology ring."""

from .cohomology import (
    F2ExtClass,
    LineBundleSum,
    count_extendible_slr_classes,
    count_slc_classes,
    cup,
    decomposable_nonzero_count,
    is_decomposable,
    plucker_class,
    stiefel_whitney,
)
from .counting import (
    general_linear_count,
    grassmann_count,
    grassmann_enumerate,
    plane_stabilizer_elements,
    plane_stabilizer_identity,
    plane_stabilizer_mul,
    projective_count,
    q_pochhammer,
)
from .kernels import IMPL
from .linalg import F2Matrix

__all__ = [
    "F2ExtClass",
    "F2Matrix",
    "IMPL",
    "LineBundleSum",
    "count_extendible_slr_classes",
    "count_slc_classes",
    "cup",
    "decomposable_nonzero_count",
    "general_linear_count",
    "grassmann_count",
    "grassmann_enumerate",
    "is_decomposable",
    "plane_stabilizer_elements",
    "plane_stabilizer_identity",
    "plane_stabilizer_mul",
    "plucker_class",
    "projective_count",
    "q_pochhammer",
    "stiefel_whitney",
]
