"""Alternating k-forms on R^n (n <= 8) with exact sparse coefficients.

A KForm stores a map from strictly increasing 1-based index tuples to
non-zero Scalars.  Constructor input may be unsorted; it is sorted with
sign tracking, and repeated indices kill the term.
"""

import json
from itertools import combinations

from ..errors import DegenerateMetricError, DimensionError
from . import linalg
from .scalar import Scalar

MAX_DIM = 8


def sort_signed(idx):
    """Sort an index tuple, returning (sorted_tuple, sign); sign 0 on repeats."""
    lst = list(idx)
    sign = 1
    for i in range(1, len(lst)):
        j = i
        while j > 0 and lst[j - 1] > lst[j]:
            lst[j - 1], lst[j] = lst[j], lst[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and lst[j - 1] == lst[j]:
            return tuple(lst), 0
    return tuple(lst), sign


def merge_signed(left, right):
    """Concatenate two increasing tuples; (merged, sign), sign 0 on overlap."""
    inv = 0
    for a in left:
        for b in right:
            if a == b:
                return None, 0
            if a > b:
                inv += 1
    merged, _ = sort_signed(left + right)
    return merged, (-1 if inv & 1 else 1)


class KForm:
    """An alternating form of fixed degree on R^dim."""

    __slots__ = ("dim", "degree", "terms")

    def __init__(self, dim, degree, terms=()):
        if not 1 <= dim <= MAX_DIM:
            raise DimensionError(f"dimension {dim} outside 1..{MAX_DIM}")
        if not 0 <= degree <= dim:
            raise DimensionError(f"degree {degree} outside 0..{dim}")
        items = terms.items() if hasattr(terms, "items") else terms
        canon = {}
        for idx, c in items:
            idx = tuple(int(i) for i in idx)
            if len(idx) != degree:
                raise DimensionError(f"index tuple {idx} has wrong length")
            if any(not 1 <= i <= dim for i in idx):
                raise DimensionError(f"index tuple {idx} outside 1..{dim}")
            sidx, sgn = sort_signed(idx)
            if sgn == 0:
                continue
            c = Scalar.coerce(c)
            if sgn < 0:
                c = -c
            tot = canon.get(sidx)
            tot = c if tot is None else tot + c
            if tot:
                canon[sidx] = tot
            else:
                canon.pop(sidx, None)
        self.dim = dim
        self.degree = degree
        self.terms = canon

    @classmethod
    def zero(cls, dim, degree):
        return cls(dim, degree)

    @classmethod
    def basis(cls, dim, idx, coeff=1):
        return cls(dim, len(idx), [(tuple(idx), coeff)])

    # -- basic queries ---------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def coefficient(self, idx):
        sidx, sgn = sort_signed(tuple(idx))
        if sgn == 0:
            return Scalar(0)
        c = self.terms.get(sidx)
        if c is None:
            return Scalar(0)
        return c if sgn > 0 else -c

    def evaluate(self, *vectors):
        """Exact value on `degree` many vectors."""
        if len(vectors) != self.degree:
            raise DimensionError("wrong number of vectors")
        vecs = [linalg.coerce_vector(v) for v in vectors]
        if any(len(v) != self.dim for v in vecs):
            raise DimensionError("vector length does not match dimension")
        total = Scalar(0)
        for idx, c in self.terms.items():
            minor = tuple(tuple(v[i - 1] for v in vecs) for i in idx)
            total = total + c * linalg.det(minor)
        return total

    # -- linear structure --------------------------------------------------

    def _check_compatible(self, other):
        if self.dim != other.dim:
            raise DimensionError("forms live on different dimensions")
        if self.degree != other.degree:
            raise DimensionError("forms have different degrees")

    def __add__(self, other):
        self._check_compatible(other)
        out = dict(self.terms)
        for idx, c in other.terms.items():
            tot = out.get(idx)
            tot = c if tot is None else tot + c
            if tot:
                out[idx] = tot
            else:
                out.pop(idx, None)
        return KForm(self.dim, self.degree, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return KForm(self.dim, self.degree, {i: -c for i, c in self.terms.items()})

    def __mul__(self, scalar):
        s = Scalar.coerce(scalar)
        if not s:
            return KForm(self.dim, self.degree)
        return KForm(self.dim, self.degree, {i: c * s for i, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __repr__(self):
        body = " ".join(
            f"{c}*e{''.join(map(str, i))}" for i, c in sorted(self.terms.items())
        )
        return f"KForm(dim={self.dim}, deg={self.degree}, {body or '0'})"

    # -- exterior algebra -------------------------------------------------

    def wedge(self, other):
        if self.dim != other.dim:
            raise DimensionError("forms live on different dimensions")
        deg = self.degree + other.degree
        if deg > self.dim:
            raise DimensionError("wedge degree exceeds dimension")
        out = {}
        for i1, c1 in self.terms.items():
            for i2, c2 in other.terms.items():
                merged, sgn = merge_signed(i1, i2)
                if sgn == 0:
                    continue
                c = c1 * c2
                if sgn < 0:
                    c = -c
                tot = out.get(merged)
                tot = c if tot is None else tot + c
                if tot:
                    out[merged] = tot
                else:
                    out.pop(merged, None)
        return KForm(self.dim, deg, out)

    def contract(self, u):
        """Interior product: (u . alpha)(v1..) = alpha(u, v1..)."""
        if self.degree < 1:
            raise DimensionError("cannot contract a degree-0 form")
        u = linalg.coerce_vector(u)
        if len(u) != self.dim:
            raise DimensionError("vector length does not match dimension")
        out = {}
        for idx, c in self.terms.items():
            for p, i in enumerate(idx):
                coeff = u[i - 1]
                if not coeff:
                    continue
                val = coeff * c
                if p & 1:
                    val = -val
                rest = idx[:p] + idx[p + 1 :]
                tot = out.get(rest)
                tot = val if tot is None else tot + val
                if tot:
                    out[rest] = tot
                else:
                    out.pop(rest, None)
        return KForm(self.dim, self.degree - 1, out)

    def pullback(self, matrix):
        """Pullback along the linear map with the given square matrix."""
        rows = getattr(matrix, "entries", matrix)
        rows = linalg.coerce_matrix(rows)
        if len(rows) != self.dim:
            raise DimensionError("matrix size does not match dimension")
        out = {}
        for big in combinations(range(1, self.dim + 1), self.degree):
            total = Scalar(0)
            for idx, c in self.terms.items():
                minor = tuple(
                    tuple(rows[i - 1][j - 1] for j in big) for i in idx
                )
                total = total + c * linalg.det(minor)
            if total:
                out[big] = total
        return KForm(self.dim, self.degree, out)

    # -- serialization ------------------------------------------------------

    def to_json(self):
        return {
            "dim": self.dim,
            "degree": self.degree,
            "terms": [
                {"idx": list(idx), "c": str(c)}
                for idx, c in sorted(self.terms.items())
            ],
        }

    def to_json_str(self):
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, obj):
        try:
            dim = int(obj["dim"])
            degree = int(obj["degree"])
            terms = [
                (tuple(t["idx"]), Scalar.parse(t["c"])) for t in obj["terms"]
            ]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed form object: {exc}") from exc
        return cls(dim, degree, terms)

    @classmethod
    def from_json_str(cls, text):
        return cls.from_json(json.loads(text))


def wedge(alpha, beta):
    return alpha.wedge(beta)


def contract(u, alpha):
    return alpha.contract(u)


def pullback(matrix, alpha):
    return alpha.pullback(matrix)


def basis_vector(dim, i):
    return tuple(Scalar(1 if j == i else 0) for j in range(1, dim + 1))


def top_coefficient(alpha):
    """Coefficient of the full index tuple of a top-degree form."""
    if alpha.degree != alpha.dim:
        raise DimensionError("form is not of top degree")
    return alpha.coefficient(tuple(range(1, alpha.dim + 1)))


def hodge_star(g, vol, alpha):
    """Hodge dual: beta ^ star(alpha) = <beta, alpha> vol for all beta.

    The inner product on k-forms is the Gram determinant of the dual
    (inverse) metric of g; vol must be a non-zero top form.
    """
    n = alpha.dim
    if getattr(g, "dim", None) != n or vol.dim != n:
        raise DimensionError("metric, volume and form dimensions disagree")
    if vol.degree != n:
        raise DimensionError("volume form must have top degree")
    scale = top_coefficient(vol)
    if not scale:
        raise DimensionError("volume form is zero")
    try:
        ginv = linalg.inverse(linalg.coerce_matrix(g.entries))
    except ZeroDivisionError:
        raise DegenerateMetricError("metric is degenerate") from None
    k = alpha.degree
    out = {}
    full = range(1, n + 1)
    for left in combinations(full, k):
        pairing = Scalar(0)
        for idx, c in alpha.terms.items():
            minor = tuple(
                tuple(ginv[i - 1][j - 1] for j in idx) for i in left
            )
            pairing = pairing + c * linalg.det(minor)
        if not pairing:
            continue
        right = tuple(i for i in full if i not in left)
        _, sgn = merge_signed(left, right)
        c = pairing * scale
        if sgn < 0:
            c = -c
        out[right] = c
    return KForm(n, n - k, out)
