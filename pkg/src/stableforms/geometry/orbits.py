"""Orbit classification of 3-forms and the structures they induce.

Dimension 7: the induced symmetric bilinear form and its signature
separate the two stable orbits (compact and split type) from everything
else.  Dimension 6: the quartic invariant of the squared endomorphism
built from (u . rho) ^ rho separates complex type (negative), para type
(positive) and degenerate (zero), and yields the (para-)complex
structure, the dual form, and the extension criteria.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from ..errors import DimensionError, OrbitError
from ..exterior import (
    Endo,
    KForm,
    Scalar,
    Signature,
    SymBilinear,
    basis_vector,
    linalg,
    signature,
    top_coefficient,
)
from .planes import OrientedPlane


class Orbit7(Enum):
    G2 = "G2"
    G2_TILDE = "G2Tilde"
    NON_STABLE = "NonStable"


class Orbit6(Enum):
    SL3C = "SL3C"
    SL3R2 = "SL3R2"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True)
class Class7:
    orbit: Orbit7
    standard_orientation: Optional[bool]
    signature: Signature
    bilinear: SymBilinear


@dataclass(frozen=True)
class Class6:
    orbit: Orbit6
    invariant: Scalar
    endo: Endo


def _require(form, dim, degree, what):
    if form.dim != dim or form.degree != degree:
        raise DimensionError(
            f"{what} requires a degree-{degree} form on R^{dim}, "
            f"got degree {form.degree} on R^{form.dim}"
        )


def induced_bilinear(phi):
    """Symmetric form B with B(u,v) = [(u.phi)^(v.phi)^phi] / 6 on the
    reference volume; equals the metric of the model compact-type form."""
    _require(phi, 7, 3, "induced_bilinear")
    sixth = Fraction(1, 6)
    cons = [phi.contract(basis_vector(7, i)) for i in range(1, 8)]
    top = tuple(range(1, 8))
    rows = [[Scalar(0)] * 7 for _ in range(7)]
    for i in range(7):
        for j in range(i, 7):
            c = cons[i].wedge(cons[j]).wedge(phi).coefficient(top) * sixth
            rows[i][j] = c
            rows[j][i] = c
    return SymBilinear(7, rows)


def classify7(phi):
    """Orbit of a 3-form on R^7 plus the orientation it is entered with."""
    _require(phi, 7, 3, "classify7")
    b = induced_bilinear(phi)
    sig = signature(b)
    if sig == (7, 0, 0):
        return Class7(Orbit7.G2, True, sig, b)
    if sig == (0, 7, 0):
        return Class7(Orbit7.G2, False, sig, b)
    if sig == (3, 4, 0):
        return Class7(Orbit7.G2_TILDE, True, sig, b)
    if sig == (4, 3, 0):
        return Class7(Orbit7.G2_TILDE, False, sig, b)
    return Class7(Orbit7.NON_STABLE, None, sig, b)


def hitchin_endomorphism(rho):
    """K with K(u) ^ vol = (u . rho) ^ rho under the reference volume."""
    _require(rho, 6, 3, "hitchin_endomorphism")
    full = tuple(range(1, 7))
    cols = []
    for i in range(1, 7):
        five = rho.contract(basis_vector(6, i)).wedge(rho)
        col = []
        for j in range(1, 7):
            rest = full[: j - 1] + full[j:]
            c = five.coefficient(rest)
            if not (j & 1):
                c = -c  # e_j . vol = (-1)^(j-1) * complementary 5-form
            col.append(c)
        cols.append(col)
    return Endo.from_columns(cols)


def hitchin_invariant(rho, endo=None):
    """The quartic invariant: trace(K^2)/6; K^2 equals this multiple of Id."""
    k = hitchin_endomorphism(rho) if endo is None else endo
    return k.compose(k).trace() / Scalar(6)


def classify6(rho):
    """Orbit of a 3-form on R^6 by the sign of the quartic invariant."""
    _require(rho, 6, 3, "classify6")
    k = hitchin_endomorphism(rho)
    lam = hitchin_invariant(rho, k)
    s = lam.sign()
    orbit = Orbit6.SL3C if s < 0 else (Orbit6.SL3R2 if s > 0 else Orbit6.DEGENERATE)
    return Class6(orbit, lam, k)


def _sqrt_invariant(lam):
    # Radical-coefficient inputs can produce an irrational invariant whose
    # square root would need a second radical; that is out of scope.
    return Scalar.sqrt(abs(lam))


def para_eigenspaces(rho):
    """Oriented +1/-1 eigenplanes of the para-complex structure of a
    para-type form, each oriented so the form is positive on its basis."""
    cls = classify6(rho)
    if cls.orbit is not Orbit6.SL3R2:
        raise OrbitError(f"para eigenspaces need a para-type form, got {cls.orbit.value}")
    root = _sqrt_invariant(cls.invariant)
    planes = []
    for sgn in (1, -1):
        shifted = [
            [
                cls.endo.entries[i][j] - (root if i == j else Scalar(0)) * sgn
                for j in range(6)
            ]
            for i in range(6)
        ]
        basis = linalg.kernel(shifted)
        if len(basis) != 3:
            raise OrbitError("eigenspace is not 3-dimensional")
        if rho.evaluate(*basis).sign() < 0:
            basis[0], basis[1] = basis[1], basis[0]
        planes.append(OrientedPlane(6, basis))
    return planes[0], planes[1]


def _normalized_endo(cls, flip):
    root = _sqrt_invariant(cls.invariant)
    k = cls.endo.scale(root.inverse())
    return k.scale(Scalar(-1)) if flip else k


def hitchin_dual(rho):
    """Partner 3-form: rho + i*dual is a complex volume form for the
    induced complex structure; dual(dual(rho)) == -rho."""
    cls = classify6(rho)
    if cls.orbit is not Orbit6.SL3C:
        raise OrbitError(f"dual needs a complex-type form, got {cls.orbit.value}")
    jhat = _normalized_endo(cls, flip=False)
    terms = {}
    for i in range(1, 7):
        ji = jhat.column(i - 1)
        for j in range(i + 1, 7):
            for k in range(j + 1, 7):
                val = rho.evaluate(ji, basis_vector(6, j), basis_vector(6, k))
                if val:
                    terms[(i, j, k)] = val
    return KForm(6, 3, terms)


def _symmetrized(omega, endo, factor):
    rows = [[Scalar(0)] * 6 for _ in range(6)]
    cols = [endo.column(i) for i in range(6)]
    basis = [basis_vector(6, i) for i in range(1, 7)]
    for i in range(6):
        for j in range(i, 6):
            val = (
                omega.evaluate(cols[i], basis[j])
                + omega.evaluate(cols[j], basis[i])
            ) * factor
            rows[i][j] = val
            rows[j][i] = val
    return SymBilinear(6, rows)


def hermitian_form(rho, omega):
    """Symmetric form -[omega(J a, b) + omega(J b, a)]/2 for the complex
    structure J induced by a complex-type form; a pseudo-Hermitian metric
    candidate for omega."""
    cls = classify6(rho)
    if cls.orbit is not Orbit6.SL3C:
        raise OrbitError(f"hermitian_form needs a complex-type form, got {cls.orbit.value}")
    _require(omega, 6, 2, "hermitian_form")
    # J is the structure whose (1,0)-forms pair the coordinates
    # (1,2), (3,4), (5,6) on the model form: the negative of the
    # normalized endomorphism.
    j = _normalized_endo(cls, flip=True)
    return _symmetrized(omega, j, Fraction(-1, 2))


def para_hermitian_form(rho, omega):
    """Symmetric form [omega(I a, b) + omega(I b, a)]/2 for the
    para-complex structure I induced by a para-type form."""
    cls = classify6(rho)
    if cls.orbit is not Orbit6.SL3R2:
        raise OrbitError(f"para_hermitian_form needs a para-type form, got {cls.orbit.value}")
    _require(omega, 6, 2, "para_hermitian_form")
    i = _normalized_endo(cls, flip=False)
    return _symmetrized(omega, i, Fraction(1, 2))


def extension_admissible(rho, omega):
    """Whether theta ^ omega + rho extends rho to a split-type 3-form on
    a 7-space: signature (2,4) of the hermitian pairing on the complex
    side, signature (3,3) plus negative omega^3 on the para side."""
    _require(rho, 6, 3, "extension_admissible")
    _require(omega, 6, 2, "extension_admissible")
    cls = classify6(rho)
    if cls.orbit is Orbit6.DEGENERATE:
        raise OrbitError("degenerate 3-form admits no extension criterion")
    if cls.orbit is Orbit6.SL3C:
        return signature(hermitian_form(rho, omega)) == (2, 4, 0)
    if signature(para_hermitian_form(rho, omega)) != (3, 3, 0):
        return False
    cube = omega.wedge(omega).wedge(omega)
    return top_coefficient(cube).sign() < 0
