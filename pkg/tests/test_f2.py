import itertools
import random
from fractions import Fraction

import pytest

from stableforms.errors import DimensionError, EnumerationLimitError
from stableforms.f2 import (
    F2ExtClass,
    F2Matrix,
    LineBundleSum,
    count_extendible_slr_classes,
    count_slc_classes,
    cup,
    decomposable_nonzero_count,
    general_linear_count,
    grassmann_count,
    grassmann_enumerate,
    is_decomposable,
    plane_stabilizer_elements,
    plane_stabilizer_identity,
    plane_stabilizer_mul,
    plucker_class,
    projective_count,
    q_pochhammer,
    stiefel_whitney,
)
from stableforms.f2 import _fallback, kernels

try:
    from stableforms.f2 import _kernels  # compiled; optional

    IMPLS = [_fallback, _kernels]
except ImportError:
    IMPLS = [_fallback]


# -- raw kernels --------------------------------------------------------------


@pytest.mark.parametrize("impl", IMPLS)
def test_kernel_rank_and_rref(impl):
    rows = [0b1100, 0b0110, 0b1010, 0b0001]
    assert impl.rank(rows) == 3
    r = impl.rref(rows)
    assert r == (0b1010, 0b0110, 0b0001)
    assert impl.rref(r) == r  # canonical fixed point
    assert impl.rank([0, 0]) == 0
    assert impl.rref([0]) == ()


@pytest.mark.parametrize("impl", IMPLS)
def test_kernel_rref_is_subspace_invariant(impl):
    rng = random.Random(40)
    for _ in range(50):
        n = rng.randint(2, 8)
        k = rng.randint(1, n)
        rows = [rng.randrange(1, 1 << n) for _ in range(k)]
        base = impl.rref(rows)
        # random invertible row mixes leave the canonical form unchanged
        mixed = list(rows)
        for _ in range(6):
            i, j = rng.sample(range(len(mixed)), 2) if len(mixed) > 1 else (0, 0)
            if i != j:
                mixed[i] ^= mixed[j]
        assert impl.rref(mixed) == base


def test_compiled_and_fallback_agree():
    if len(IMPLS) < 2:
        pytest.skip("compiled kernels not built")
    rng = random.Random(41)
    for _ in range(200):
        n = rng.randint(1, 10)
        rows = [rng.randrange(0, 1 << n) for _ in range(rng.randint(1, 6))]
        assert _fallback.rank(rows) == _kernels.rank(rows)
        assert _fallback.rref(rows) == _kernels.rref(rows)
    for n, k in [(4, 2), (5, 3), (6, 2)]:
        assert _fallback.enumerate_rref(n, k) == _kernels.enumerate_rref(n, k)
    for n in (4, 5, 6):
        assert _fallback.count_decomposable_nonzero(
            n
        ) == _kernels.count_decomposable_nonzero(n)


# -- counting ----------------------------------------------------------------


def test_projective_counts():
    assert projective_count(2, 7) == 127
    assert projective_count(2, 1) == 1
    assert projective_count(3, 3) == 13


def test_projective_count_brute_force_f3():
    # count lines in F_3^3 by enumerating non-zero vectors up to scale
    vectors = [
        v for v in itertools.product(range(3), repeat=3) if any(v)
    ]
    lines = set()
    for v in vectors:
        scaled = tuple(tuple((c * s) % 3 for c in v) for s in (1, 2))
        lines.add(min([v, *scaled]))
    assert len(lines) == projective_count(3, 3)


def test_q_pochhammer():
    half = Fraction(1, 2)
    assert q_pochhammer(half, half, 1) == Fraction(1, 2)
    assert q_pochhammer(half, half, 2) == Fraction(3, 8)
    assert q_pochhammer(half, half, 0) == 1


def test_gl_counts():
    assert general_linear_count(2, 1) == 1
    assert general_linear_count(2, 3) == 168
    assert general_linear_count(3, 2) == 48


def test_gl_count_brute_force_f2():
    count = 0
    for val in range(1 << 9):
        rows = [(val >> (3 * i)) & 0b111 for i in range(3)]
        if kernels.rank(rows) == 3:
            count += 1
    assert count == general_linear_count(2, 3)


def test_gl_count_brute_force_f3():
    count = 0
    for entries in itertools.product(range(3), repeat=4):
        a, b, c, d = entries
        if (a * d - b * c) % 3:
            count += 1
    assert count == general_linear_count(3, 2)


def test_gl_recursion():
    for size in (2, 3, 4, 5):
        for n in range(1, 6):
            assert general_linear_count(size, n + 1) == (
                size**n
                * (size - 1)
                * projective_count(size, n + 1)
                * general_linear_count(size, n)
            )


def test_grassmann_counts():
    assert grassmann_count(2, 6, 2) == 651
    assert grassmann_count(2, 6, 0) == 1
    assert grassmann_count(2, 4, 2) == 35
    with pytest.raises(ValueError):
        grassmann_count(2, 4, 5)


def test_grassmann_duality():
    for n in range(1, 9):
        for k in range(n + 1):
            assert grassmann_count(2, n, k) == grassmann_count(2, n, n - k)


def test_grassmann_formula_integrality():
    for size in (2, 3, 4, 5):
        for n in range(0, 11):
            for k in range(n + 1):
                assert isinstance(grassmann_count(size, n, k), int)


def test_grassmann_enumerate_matches_formula():
    for n in range(1, 9):
        for k in range(n + 1):
            planes = grassmann_enumerate(n, k)
            assert len(planes) == grassmann_count(2, n, k)
            assert len(set(planes)) == len(planes)


def test_grassmann_enumerate_examples():
    assert len(grassmann_enumerate(6, 2)) == 651
    assert len(grassmann_enumerate(6, 0)) == 1
    assert len(grassmann_enumerate(4, 2)) == 35


def test_grassmann_enumerate_canonical():
    for plane in grassmann_enumerate(5, 2):
        assert plane.is_rref()


def test_grassmann_enumerate_limits(monkeypatch):
    with pytest.raises(EnumerationLimitError):
        grassmann_enumerate(15, 2)
    monkeypatch.setenv("STABLEFORMS_MAX_ENUM", "100")
    with pytest.raises(EnumerationLimitError):
        grassmann_enumerate(6, 2)


# -- the stabilizer group law -------------------------------------------------


def test_plane_stabilizer_group_exhaustive():
    elements = plane_stabilizer_elements(3, 1)
    assert len(elements) == 1 * 6 * 4  # |GL1| * |GL2| * |Hom|
    ident = plane_stabilizer_identity(3, 1)
    for x in elements:
        assert plane_stabilizer_mul(x, ident) == x
        assert plane_stabilizer_mul(ident, x) == x
    for x in elements:
        for y in elements:
            xy = plane_stabilizer_mul(x, y)
            for z in elements:
                assert plane_stabilizer_mul(xy, z) == plane_stabilizer_mul(
                    x, plane_stabilizer_mul(y, z)
                )


def test_f2matrix_inverse():
    m = F2Matrix.from_bit_rows([[1, 1], [0, 1]])
    inv = m.inverse()
    assert m.mul(inv) == F2Matrix.identity(2)
    with pytest.raises(ZeroDivisionError):
        F2Matrix.from_bit_rows([[1, 1], [1, 1]]).inverse()


# -- cohomology ----------------------------------------------------------------


def gen(i, n=6):
    return F2ExtClass.generator(n, i)


def test_cup_examples():
    a, b = gen(1), gen(2)
    assert cup(a, b) == F2ExtClass(6, 2, [(1, 2)])
    assert cup(a, a).is_zero
    lhs = cup(gen(1) + gen(2), gen(1) + gen(3))
    assert lhs == F2ExtClass(6, 2, [(1, 3), (1, 2), (2, 3)])


def test_cup_commutes_and_associates():
    rng = random.Random(42)
    for _ in range(30):
        xs = [
            F2ExtClass.from_bits(6, rng.randrange(1, 64)) for _ in range(3)
        ]
        a, b, c = xs
        assert cup(a, b) == cup(b, a)
        assert cup(cup(a, b), c) == cup(a, cup(b, c))


def test_is_decomposable_examples():
    w = F2ExtClass(6, 2, [(1, 2)])
    flag, witness = is_decomposable(w)
    assert flag and cup(*witness) == w
    w2 = F2ExtClass(6, 2, [(1, 2), (3, 4)])
    assert is_decomposable(w2) == (False, None)
    zero = F2ExtClass(6, 2)
    flag, witness = is_decomposable(zero)
    assert flag and witness[0].is_zero and witness[1].is_zero
    with pytest.raises(DimensionError):
        is_decomposable(gen(1))


def test_decomposability_agrees_with_exhaustive_search():
    # all wedges a^b over F2^6, then compare class by class (2^15 classes)
    n = 6
    pair_index = {
        pair: p for p, pair in enumerate(itertools.combinations(range(1, n + 1), 2))
    }
    wedges = set()
    for abits in range(1 << n):
        for bbits in range(abits, 1 << n):
            mask = 0
            for (i, j), p in pair_index.items():
                ai = (abits >> (i - 1)) & 1
                aj = (abits >> (j - 1)) & 1
                bi = (bbits >> (i - 1)) & 1
                bj = (bbits >> (j - 1)) & 1
                if (ai & bj) ^ (aj & bi):
                    mask |= 1 << p
            wedges.add(mask)
    pairs = list(pair_index)
    for mask in range(1 << len(pairs)):
        w = F2ExtClass(n, 2, [pairs[p] for p in range(len(pairs)) if (mask >> p) & 1])
        assert is_decomposable(w)[0] == (mask in wedges)


def test_decomposable_scan_count():
    assert decomposable_nonzero_count(6) == 651
    assert decomposable_nonzero_count(4) == 35
    assert decomposable_nonzero_count(2) == 1


def test_stiefel_whitney_examples():
    a, b = gen(1), gen(2)
    w1, w2 = stiefel_whitney([a, b, a + b])
    assert w1.is_zero
    assert w2 == cup(a, b)
    zero = F2ExtClass(6, 1)
    w1, w2 = stiefel_whitney([zero, zero, zero])
    assert w1.is_zero and w2.is_zero
    s = LineBundleSum([a, b, a + b])
    assert s.orientable


def test_stiefel_whitney_general_sum():
    rng = random.Random(43)
    for _ in range(20):
        lines = [F2ExtClass.from_bits(6, rng.randrange(64)) for _ in range(4)]
        w1, w2 = stiefel_whitney(lines)
        expect1 = F2ExtClass(6, 1)
        for l in lines:
            expect1 = expect1 + l
        assert w1 == expect1
        expect2 = F2ExtClass(6, 2)
        for x, y in itertools.combinations(lines, 2):
            expect2 = expect2 + cup(x, y)
        assert w2 == expect2


def test_plucker_injective_on_2_planes():
    planes = grassmann_enumerate(6, 2)
    classes = {plucker_class(p) for p in planes}
    assert len(classes) == len(planes) == 651
    # every image is decomposable and non-zero
    for c in itertools.islice(classes, 50):
        flag, _ = is_decomposable(c)
        assert flag and not c.is_zero


def test_class_counts():
    assert count_slc_classes(6) == 64
    assert count_slc_classes(1) == 2
    assert count_slc_classes(3) == 8
    assert count_extendible_slr_classes(6) == 652
    assert count_extendible_slr_classes(4) == 36
    assert count_extendible_slr_classes(2) == 2
    assert count_extendible_slr_classes(1) == 1


def test_extendible_count_matches_scan():
    for n in (2, 3, 4, 5, 6):
        assert count_extendible_slr_classes(n) == decomposable_nonzero_count(n) + 1
