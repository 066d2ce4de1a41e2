"""Oriented 3-planes given by an ordered, exactly-independent basis."""

from ..errors import DimensionError
from ..exterior import Scalar, linalg


class OrientedPlane:
    """Three ordered, linearly independent vectors; order fixes orientation."""

    __slots__ = ("dim", "vectors")

    def __init__(self, dim, vectors):
        vecs = tuple(linalg.coerce_vector(v) for v in vectors)
        if len(vecs) != 3:
            raise DimensionError("an oriented plane needs exactly 3 vectors")
        if any(len(v) != dim for v in vecs):
            raise DimensionError("vector length does not match dimension")
        if linalg.rank(vecs) != 3:
            raise DimensionError("plane vectors are linearly dependent")
        self.dim = dim
        self.vectors = vecs

    def basis_matrix(self):
        """3 x dim matrix with the basis vectors as rows."""
        return self.vectors

    def __repr__(self):
        return f"OrientedPlane(dim={self.dim}, vectors={self.vectors!r})"

    def spans_same(self, other):
        """True when both planes have the same underlying 3-space."""
        if self.dim != other.dim:
            return False
        stacked = self.vectors + other.vectors
        return linalg.rank(stacked) == 3

    def same_oriented(self, other):
        """True when the planes agree as *oriented* subspaces."""
        if not self.spans_same(other):
            return False
        # Express other's basis in this basis via the Euclidean Gram matrix,
        # invertible because the rows are independent over a real field.
        g = [
            [_dot(u, v) for v in self.vectors] for u in self.vectors
        ]
        coords = []
        for w in other.vectors:
            rhs = [_dot(u, w) for u in self.vectors]
            coords.append(linalg.solve(g, rhs))
        return linalg.det(coords).sign() > 0


def _dot(u, v):
    return sum((x * y for x, y in zip(u, v)), Scalar(0))
