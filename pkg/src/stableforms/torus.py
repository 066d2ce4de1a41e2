"""Exact exterior calculus on the n-torus (optionally times a t-interval).

Coefficient functions are finite Fourier sums sum_k c_k exp(i k.x) with
Gaussian-rational c_k, stored in the complex-exponential basis so that
products are single convolutions; realness (c_{-k} = conj(c_k)) is an
enforced invariant.  An optional formal parameter t enters polynomially
and is only ever substituted at rational values.  Evaluation is exact at
points where every active frequency satisfies k.x in (pi/2)Z, since
exp(i k.x) is then a fourth root of unity.
"""

import json
import math
from fractions import Fraction

from .errors import DimensionError
from .exterior import KForm, Scalar
from .exterior.forms import sort_signed

_F0 = Fraction(0)
_F1 = Fraction(1)


class GaussQ:
    """A Gaussian rational re + i*im."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @staticmethod
    def coerce(x):
        if isinstance(x, GaussQ):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussQ(x)
        raise TypeError(f"cannot interpret {x!r} as a Gaussian rational")

    def __add__(self, other):
        other = GaussQ.coerce(other)
        return GaussQ(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussQ.coerce(other)
        return GaussQ(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussQ(-self.re, -self.im)

    def __mul__(self, other):
        other = GaussQ.coerce(other)
        return GaussQ(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conj(self):
        return GaussQ(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            other = GaussQ.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussQ({self.re}, {self.im})"

    def __str__(self):
        return f"{self.re}+i*{self.im}"

    @staticmethod
    def parse(text):
        re_part, _, im_part = text.replace(" ", "").partition("+i*")
        if not _:
            raise ValueError(f"malformed complex literal {text!r}")
        return GaussQ(Fraction(re_part), Fraction(im_part))

    def __complex__(self):
        return complex(float(self.re), float(self.im))


_QUARTER_TURNS = (
    GaussQ(1, 0),
    GaussQ(0, 1),
    GaussQ(-1, 0),
    GaussQ(0, -1),
)


class TrigScalar:
    """A real-valued trigonometric polynomial, optionally polynomial in t.

    terms: {(frequency tuple, t-degree): GaussQ}, with the reality pairing
    terms[(-k, m)] == conj(terms[(k, m)]) enforced at construction.
    """

    __slots__ = ("dim", "terms")

    def __init__(self, dim, terms=()):
        items = terms.items() if hasattr(terms, "items") else terms
        canon = {}
        for (freq, tdeg), c in items:
            freq = tuple(int(f) for f in freq)
            if len(freq) != dim:
                raise DimensionError(f"frequency {freq} has wrong length")
            if tdeg < 0:
                raise DimensionError("negative t-degree")
            c = GaussQ.coerce(c)
            if not c:
                continue
            key = (freq, int(tdeg))
            tot = canon.get(key)
            tot = c if tot is None else tot + c
            if tot:
                canon[key] = tot
            else:
                canon.pop(key, None)
        for (freq, tdeg), c in canon.items():
            neg = tuple(-f for f in freq)
            if canon.get((neg, tdeg), GaussQ()) != c.conj():
                raise DimensionError(
                    f"coefficients at {freq} and {neg} are not conjugate"
                )
        self.dim = dim
        self.terms = canon

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, dim, value):
        return cls(dim, {((0,) * dim, 0): GaussQ.coerce(value)})

    @classmethod
    def zero(cls, dim):
        return cls(dim)

    @classmethod
    def cos_wave(cls, dim, freq):
        freq = tuple(freq)
        half = GaussQ(Fraction(1, 2))
        # pair list, not a dict: both halves must accumulate at frequency 0
        return cls(dim, [((freq, 0), half), ((tuple(-f for f in freq), 0), half)])

    @classmethod
    def sin_wave(cls, dim, freq):
        freq = tuple(freq)
        mi_half = GaussQ(0, Fraction(-1, 2))  # 1/(2i)
        return cls(
            dim,
            [((freq, 0), mi_half), ((tuple(-f for f in freq), 0), -mi_half)],
        )

    @classmethod
    def t_monomial(cls, dim, degree=1, coeff=1):
        return cls(dim, {((0,) * dim, degree): GaussQ.coerce(coeff)})

    # -- ring structure ---------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    @property
    def has_t(self):
        return any(tdeg for (_, tdeg) in self.terms)

    def __add__(self, other):
        if self.dim != other.dim:
            raise DimensionError("mixed torus dimensions")
        out = dict(self.terms)
        for key, c in other.terms.items():
            tot = out.get(key)
            tot = c if tot is None else tot + c
            if tot:
                out[key] = tot
            else:
                out.pop(key, None)
        return TrigScalar(self.dim, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TrigScalar(self.dim, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TrigScalar.constant(self.dim, other)
        if self.dim != other.dim:
            raise DimensionError("mixed torus dimensions")
        out = {}
        for (f1, m1), c1 in self.terms.items():
            for (f2, m2), c2 in other.terms.items():
                key = (tuple(a + b for a, b in zip(f1, f2)), m1 + m2)
                c = c1 * c2
                tot = out.get(key)
                tot = c if tot is None else tot + c
                if tot:
                    out[key] = tot
                else:
                    out.pop(key, None)
        return TrigScalar(self.dim, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TrigScalar):
            return NotImplemented
        return self.dim == other.dim and self.terms == other.terms

    def __repr__(self):
        return f"TrigScalar(dim={self.dim}, terms={self.terms!r})"

    # -- calculus -----------------------------------------------------------

    def dx(self, j):
        """Partial derivative in the j-th torus coordinate (1-based)."""
        out = {}
        for (freq, m), c in self.terms.items():
            kj = freq[j - 1]
            if kj:
                out[(freq, m)] = c * GaussQ(0, kj)  # multiply by i*k_j
        return TrigScalar(self.dim, out)

    def dt(self):
        out = {}
        for (freq, m), c in self.terms.items():
            if m:
                key = (freq, m - 1)
                c2 = c * m
                tot = out.get(key)
                out[key] = c2 if tot is None else tot + c2
        return TrigScalar(self.dim, out)

    # -- evaluation -----------------------------------------------------------

    def eval_exact(self, quarter_point, t=None):
        """Exact value at x = (pi/2) * quarter_point, a rational vector for
        which k.quarter_point is an integer for every active frequency."""
        q = tuple(Fraction(x) for x in quarter_point)
        if len(q) != self.dim:
            raise DimensionError("point has wrong length")
        if self.has_t and t is None:
            raise DimensionError("a rational t value is required")
        tval = None if t is None else Fraction(t)
        total = GaussQ()
        for (freq, m), c in self.terms.items():
            phase = sum(k * x for k, x in zip(freq, q))
            if phase.denominator != 1:
                raise DimensionError(
                    f"frequency {freq} is not exactly evaluable at this point"
                )
            val = c * _QUARTER_TURNS[phase.numerator % 4]
            if m:
                val = val * (tval**m)
            total = total + val
        assert total.im == 0  # realness invariant
        return total.re

    def eval_float(self, point, t=None):
        total = 0.0
        for (freq, m), c in self.terms.items():
            phase = sum(k * x for k, x in zip(freq, point))
            val = complex(c) * complex(math.cos(phase), math.sin(phase))
            if m:
                val *= float(t) ** m
            total += val.real
        return total


class TrigForm:
    """A differential form on T^n (or on an interval times T^n) whose
    coefficients are TrigScalars.  Index 0 denotes the dt-slot and is
    allowed only on cylinder forms (has_t set)."""

    __slots__ = ("dim", "degree", "has_t", "terms")

    def __init__(self, dim, degree, terms=(), has_t=False):
        if not 1 <= dim <= 7:
            raise DimensionError("torus dimension outside 1..7")
        slots = dim + (1 if has_t else 0)
        if not 0 <= degree <= slots:
            raise DimensionError(f"degree {degree} outside 0..{slots}")
        items = terms.items() if hasattr(terms, "items") else terms
        canon = {}
        for idx, coeff in items:
            idx = tuple(int(i) for i in idx)
            if len(idx) != degree:
                raise DimensionError(f"index tuple {idx} has wrong length")
            lo = 0 if has_t else 1
            if any(not lo <= i <= dim for i in idx):
                raise DimensionError(f"index tuple {idx} out of range")
            sidx, sgn = sort_signed(idx)
            if sgn == 0:
                continue
            if not isinstance(coeff, TrigScalar):
                coeff = TrigScalar.constant(dim, coeff)
            if coeff.dim != dim:
                raise DimensionError("coefficient dimension mismatch")
            if sgn < 0:
                coeff = -coeff
            tot = canon.get(sidx)
            tot = coeff if tot is None else tot + coeff
            if not tot.is_zero:
                canon[sidx] = tot
            else:
                canon.pop(sidx, None)
        self.dim = dim
        self.degree = degree
        self.has_t = has_t
        self.terms = canon

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, dim, degree, has_t=False):
        return cls(dim, degree, (), has_t)

    @classmethod
    def from_kform(cls, kf):
        """Promote a constant form; coefficients must be rational."""
        terms = {}
        for idx, c in kf.terms.items():
            if not c.is_rational:
                raise DimensionError("irrational coefficients have no Fourier lift")
            terms[idx] = TrigScalar.constant(kf.dim, c.a)
        return cls(kf.dim, kf.degree, terms)

    @classmethod
    def dt_form(cls, dim):
        return cls(dim, 1, {(0,): TrigScalar.constant(dim, 1)}, has_t=True)

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def with_t(self):
        """The same form regarded on the cylinder."""
        if self.has_t:
            return self
        return TrigForm(self.dim, self.degree, self.terms, has_t=True)

    def __add__(self, other):
        if self.dim != other.dim or self.degree != other.degree:
            raise DimensionError("incompatible forms")
        if self.has_t != other.has_t:
            raise DimensionError("mixed torus and cylinder forms")
        out = dict(self.terms)
        for idx, c in other.terms.items():
            tot = out.get(idx)
            tot = c if tot is None else tot + c
            if not tot.is_zero:
                out[idx] = tot
            else:
                out.pop(idx, None)
        return TrigForm(self.dim, self.degree, out, self.has_t)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TrigForm(
            self.dim, self.degree, {i: -c for i, c in self.terms.items()}, self.has_t
        )

    def scale(self, f):
        """Multiply by a TrigScalar (or rational) coefficient function."""
        if not isinstance(f, TrigScalar):
            f = TrigScalar.constant(self.dim, f)
        return TrigForm(
            self.dim,
            self.degree,
            {i: f * c for i, c in self.terms.items()},
            self.has_t,
        )

    def __eq__(self, other):
        if not isinstance(other, TrigForm):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.degree == other.degree
            and self.has_t == other.has_t
            and self.terms == other.terms
        )

    def __repr__(self):
        return (
            f"TrigForm(dim={self.dim}, deg={self.degree}, has_t={self.has_t}, "
            f"{len(self.terms)} terms)"
        )

    def wedge(self, other):
        if self.dim != other.dim or self.has_t != other.has_t:
            raise DimensionError("incompatible forms")
        deg = self.degree + other.degree
        out = {}
        for i1, c1 in self.terms.items():
            for i2, c2 in other.terms.items():
                merged, sgn = sort_signed(i1 + i2)
                if sgn == 0:
                    continue
                c = c1 * c2
                if sgn < 0:
                    c = -c
                tot = out.get(merged)
                tot = c if tot is None else tot + c
                if not tot.is_zero:
                    out[merged] = tot
                else:
                    out.pop(merged, None)
        return TrigForm(self.dim, deg, out, self.has_t)

    # -- calculus -------------------------------------------------------------

    def d(self):
        """Exterior derivative, including dt ^ d/dt on cylinder forms."""
        slots = self.dim + (1 if self.has_t else 0)
        if self.degree == slots:
            # Top-degree forms are closed; keep the result representable.
            return TrigForm.zero(self.dim, self.degree, self.has_t)
        out = {}

        def _accumulate(j, idx, g):
            if g.is_zero:
                return
            merged, sgn = sort_signed((j,) + idx)
            if sgn == 0:
                return
            if sgn < 0:
                g = -g
            tot = out.get(merged)
            tot = g if tot is None else tot + g
            if not tot.is_zero:
                out[merged] = tot
            else:
                out.pop(merged, None)

        for idx, f in self.terms.items():
            for j in range(1, self.dim + 1):
                if j in idx:
                    continue
                _accumulate(j, idx, f.dx(j))
            if self.has_t and 0 not in idx:
                _accumulate(0, idx, f.dt())
        return TrigForm(self.dim, self.degree + 1, out, self.has_t)

    # -- evaluation -------------------------------------------------------------

    def eval_exact(self, quarter_point, t=None):
        """Pointwise value as an exact KForm.  Cylinder forms evaluate on
        R^(dim+1) with the t-direction mapped to index 1; torus forms on
        R^dim with the identity indexing."""
        if self.has_t:
            if t is None:
                raise DimensionError("cylinder forms need a rational t value")
            shift = 1
            out_dim = self.dim + 1
        else:
            if t is not None:
                raise DimensionError("t given for a form without a t-slot")
            shift = 0
            out_dim = self.dim
        terms = {}
        for idx, f in self.terms.items():
            val = f.eval_exact(quarter_point, t)
            if val:
                terms[tuple(i + shift for i in idx)] = Scalar(val)
        return KForm(out_dim, self.degree, terms)

    # -- serialization -------------------------------------------------------------

    def to_json(self):
        entries = []
        for idx in sorted(self.terms):
            f = self.terms[idx]
            for (freq, tdeg) in sorted(f.terms):
                item = {
                    "idx": list(idx),
                    "freq": list(freq),
                    "c": str(f.terms[(freq, tdeg)]),
                }
                if tdeg:
                    item["tdeg"] = tdeg
                entries.append(item)
        return {
            "dim": self.dim,
            "degree": self.degree,
            "t": self.has_t,
            "terms": entries,
        }

    def to_json_str(self):
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, obj):
        dim = int(obj["dim"])
        scalars = {}
        for item in obj["terms"]:
            idx = tuple(item["idx"])
            key = (tuple(item["freq"]), int(item.get("tdeg", 0)))
            c = GaussQ.parse(item["c"])
            acc = scalars.setdefault(idx, {})
            acc[key] = acc.get(key, GaussQ()) + c
        terms = {idx: TrigScalar(dim, acc) for idx, acc in scalars.items()}
        return cls(dim, int(obj["degree"]), terms, bool(obj.get("t", False)))

    @classmethod
    def from_json_str(cls, text):
        return cls.from_json(json.loads(text))


def phase_family(freqs, base, partner):
    """cos(a.x) * base + sin(a.x) * partner for the frequency vector a."""
    dim = base.dim
    freqs = tuple(int(f) for f in freqs)
    if len(freqs) != dim:
        raise DimensionError("frequency vector has wrong length")
    ca = TrigScalar.cos_wave(dim, freqs)
    sa = TrigScalar.sin_wave(dim, freqs)
    return TrigForm.from_kform(base).scale(ca) + TrigForm.from_kform(partner).scale(sa)


def cylinder_extension(rho, omega):
    """dt ^ omega + rho + t * d(omega) on the cylinder over the torus;
    its exterior derivative equals the pullback of d(rho)."""
    if isinstance(rho, KForm):
        rho = TrigForm.from_kform(rho)
    if isinstance(omega, KForm):
        omega = TrigForm.from_kform(omega)
    if rho.has_t or omega.has_t:
        raise DimensionError("inputs must live on the torus, not the cylinder")
    if rho.degree != 3 or omega.degree != 2 or rho.dim != omega.dim:
        raise DimensionError("need a 3-form and a 2-form on one torus")
    dt = TrigForm.dt_form(rho.dim)
    t = TrigScalar.t_monomial(rho.dim)
    return (
        dt.wedge(omega.with_t())
        + rho.with_t()
        + omega.d().with_t().scale(t)
    )
