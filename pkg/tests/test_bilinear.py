import random

import pytest

from oracles import rand_invertible
from stableforms import DimensionError, Endo, SymBilinear, signature, standard_form
from stableforms.exterior import Scalar, linalg


def test_symmetry_enforced():
    with pytest.raises(DimensionError):
        SymBilinear(2, [[0, 1], [2, 0]])


def test_signature_examples():
    assert signature(standard_form("split_metric")) == (3, 4, 0)
    assert signature(SymBilinear.zero(6)) == (0, 0, 6)
    assert signature(SymBilinear.diagonal([2, -3, 0])) == (1, 1, 1)


def test_signature_hyperbolic_block():
    # all-zero diagonal forces the rank-2 off-diagonal step
    b = SymBilinear(2, [[0, 1], [1, 0]])
    assert signature(b) == (1, 1, 0)
    b4 = SymBilinear(4, [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 2], [0, 0, 2, 0]])
    assert signature(b4) == (2, 2, 0)


def test_signature_mixed_case():
    b = SymBilinear(
        3,
        [[0, 1, 2], [1, 0, 0], [2, 0, 0]],
    )
    # rank 2 alternating-looking symmetric matrix: one hyperbolic pair
    assert signature(b) == (1, 1, 1)


def test_signature_radical_entries():
    r = Scalar(0, 1, 2)
    b = SymBilinear(2, [[r, 0], [0, -r]])
    assert signature(b) == (1, 1, 0)


def test_sylvester_invariance_random():
    rng = random.Random(606)
    for _ in range(100):
        n = rng.choice([3, 4, 5, 6])
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                v = rng.randint(-3, 3)
                m[i][j] = v
                m[j][i] = v
        b = SymBilinear(n, m)
        a = rand_invertible(rng, n)
        assert signature(b.transform(a)) == signature(b)


def test_restrict_gram():
    g = standard_form("split_metric")
    vecs = [
        [1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0],
    ]
    gram = g.restrict(vecs)
    assert gram.entries[0][0] == Scalar(1)
    assert gram.entries[1][1] == Scalar(-1)
    assert gram.entries[0][1] == Scalar(0)


def test_endo_helpers():
    a = Endo.diagonal([1, 2])
    b = Endo(2, [[0, 1], [1, 0]])
    assert a.compose(b).entries == linalg.coerce_matrix([[0, 1], [2, 0]])
    assert b.det() == Scalar(-1)
    assert a.trace() == Scalar(3)
    assert Endo.from_columns([[1, 0], [3, 4]]).column(1) == linalg.coerce_vector([3, 4])
