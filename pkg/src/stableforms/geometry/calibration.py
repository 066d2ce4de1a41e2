"""Calibrated 3-planes, the induced cross product, and the swap between
the compact-type and split-type orbits across a calibrated plane.

All predicates are polynomial in the induced bilinear form B, so they
stay in the base field even though the normalized metric involves a
ninth root of det B: calibration is decided by the sign of phi on the
oriented basis together with phi(b)^6 * det(B) == det(B|_C)^3.
"""

from ..errors import NotCalibratedError, OrbitError
from ..exterior import KForm, Scalar, basis_vector, linalg, signature
from .orbits import Orbit7, classify7
from .planes import OrientedPlane


def _classified(phi, orbit, what):
    cls = classify7(phi)
    if cls.orbit is not orbit or cls.standard_orientation is not True:
        raise OrbitError(
            f"{what} needs a standard-orientation {orbit.value} form, "
            f"got {cls.orbit.value}"
        )
    return cls


def cross_product(phi, u, v):
    """Vector w with B(w, .) = phi(u, v, .) for the induced bilinear B."""
    cls = _classified(phi, Orbit7.G2, "cross_product")
    u = linalg.coerce_vector(u)
    v = linalg.coerce_vector(v)
    rhs = [phi.evaluate(u, v, basis_vector(7, i)) for i in range(1, 8)]
    return linalg.solve(cls.bilinear.entries, rhs)


def _calibration_identity(phi, bilinear, plane):
    val = phi.evaluate(*plane.vectors)
    if val.sign() <= 0:
        return False
    gram = bilinear.restrict(plane.vectors)
    return val ** 6 * linalg.det(bilinear.entries) == linalg.det(gram.entries) ** 3


def is_calibrated(phi, plane):
    """Whether phi restricts to the metric volume on the oriented plane."""
    cls = _classified(phi, Orbit7.G2, "is_calibrated")
    return _calibration_identity(phi, cls.bilinear, plane)


def is_positively_calibrated(phi, plane):
    """Calibration for split-type forms: the plane must also be spacelike."""
    cls = _classified(phi, Orbit7.G2_TILDE, "is_positively_calibrated")
    gram = cls.bilinear.restrict(plane.vectors)
    if signature(gram) != (3, 0, 0):
        return False
    return _calibration_identity(phi, cls.bilinear, plane)


def _projection(bilinear, plane):
    """B-orthogonal projection onto the plane as a 7x7 matrix."""
    v = plane.basis_matrix()  # 3 x 7
    gram = bilinear.restrict(plane.vectors)
    ginv = linalg.inverse(gram.entries)
    vt = linalg.transpose(v)
    return linalg.mat_mul(
        linalg.mat_mul(linalg.mat_mul(vt, ginv), v), bilinear.entries
    )


def calibrated_swap(phi, plane):
    """2*phi|_C - phi across a (positively) calibrated plane C; lands in
    the opposite stable orbit and is an involution."""
    cls = classify7(phi)
    if cls.orbit is Orbit7.G2 and cls.standard_orientation:
        if not is_calibrated(phi, plane):
            raise NotCalibratedError("plane is not calibrated for this form")
    elif cls.orbit is Orbit7.G2_TILDE and cls.standard_orientation:
        if not is_positively_calibrated(phi, plane):
            raise NotCalibratedError("plane is not positively calibrated for this form")
    else:
        raise OrbitError(f"swap needs a stable standard-orientation form, got {cls.orbit.value}")
    proj = _projection(cls.bilinear, plane)
    restricted = phi.pullback(proj)
    return restricted * Scalar(2) - phi


def plane_from_cross(phi, u, v):
    """Oriented plane spanned by u, v and their cross product."""
    w = cross_product(phi, u, v)
    return OrientedPlane(7, [u, v, w])
