"""Pure-Python bit-packed GF(2) kernels.

Mirrors the API of the compiled module `_kernels`; rows are Python ints
with column j (0-based, counted from the left of an n-column matrix)
stored at bit (n - 1 - j).
"""

from itertools import combinations


def rank(rows):
    piv = {}
    for v in rows:
        while v:
            m = v.bit_length() - 1
            p = piv.get(m)
            if p is None:
                piv[m] = v
                break
            v ^= p
    return len(piv)


def rref(rows):
    """Canonical reduced row-echelon rows, leading bit descending."""
    piv = {}
    for v in rows:
        while v:
            m = v.bit_length() - 1
            p = piv.get(m)
            if p is None:
                piv[m] = v
                break
            v ^= p
    for m in sorted(piv):
        v = piv[m]
        for mm in piv:
            if mm != m and (piv[mm] >> m) & 1:
                piv[mm] ^= v
    return tuple(piv[m] for m in sorted(piv, reverse=True))


def enumerate_rref(n, k):
    """All canonical RREF row-tuples of k-dimensional subspaces of F2^n."""
    if k == 0:
        return [()]
    out = []
    for pivots in combinations(range(n), k):
        pivot_set = set(pivots)
        positions = [
            (r, c)
            for r, p in enumerate(pivots)
            for c in range(p + 1, n)
            if c not in pivot_set
        ]
        base = [1 << (n - 1 - p) for p in pivots]
        for mask in range(1 << len(positions)):
            rows = base[:]
            mm = mask
            for r, c in positions:
                if mm & 1:
                    rows[r] |= 1 << (n - 1 - c)
                mm >>= 1
            out.append(tuple(rows))
    return out


def count_decomposable_nonzero(n):
    """Number of non-zero alternating classes on n letters whose
    coefficient matrix has rank <= 2 over GF(2)."""
    if n > 8:
        raise ValueError("scan is capped at 8 letters (2^28 classes)")
    pairs = list(combinations(range(n), 2))
    count = 0
    for w in range(1, 1 << len(pairs)):
        rows = [0] * n
        ww = w
        idx = 0
        while ww:
            if ww & 1:
                i, j = pairs[idx]
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            ww >>= 1
            idx += 1
        piv = {}
        over = False
        for v in rows:
            while v:
                m = v.bit_length() - 1
                p = piv.get(m)
                if p is None:
                    piv[m] = v
                    break
                v ^= p
            if len(piv) > 2:
                over = True
                break
        if not over:
            count += 1
    return count
