# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled bit-packed GF(2) kernels; API mirrors `_fallback`."""

from itertools import combinations

from libc.stdint cimport uint64_t


cdef inline int _msb(uint64_t v) nogil:
    cdef int m = -1
    while v:
        v >>= 1
        m += 1
    return m


cdef int _reduce_rows(uint64_t *rows, int count, uint64_t *piv_row,
                      int *piv_bit, int cap) nogil:
    """Row-reduce into pivot arrays; returns rank (early exit past cap)."""
    cdef int npiv = 0
    cdef uint64_t v
    cdef int i, j, m, hit
    for i in range(count):
        v = rows[i]
        while v:
            m = _msb(v)
            hit = 0
            for j in range(npiv):
                if piv_bit[j] == m:
                    v ^= piv_row[j]
                    hit = 1
                    break
            if not hit:
                piv_row[npiv] = v
                piv_bit[npiv] = m
                npiv += 1
                if cap and npiv > cap:
                    return npiv
                break
    return npiv


def rank(rows):
    cdef uint64_t buf[64]
    cdef uint64_t piv_row[64]
    cdef int piv_bit[64]
    cdef int count = 0
    for v in rows:
        if count == 64:
            raise ValueError("too many rows for the compiled kernel")
        buf[count] = <uint64_t> v
        count += 1
    return _reduce_rows(buf, count, piv_row, piv_bit, 0)


def rref(rows):
    """Canonical reduced row-echelon rows, leading bit descending."""
    cdef uint64_t buf[64]
    cdef uint64_t piv_row[64]
    cdef int piv_bit[64]
    cdef int count = 0
    cdef int npiv, i, j
    for v in rows:
        if count == 64:
            raise ValueError("too many rows for the compiled kernel")
        buf[count] = <uint64_t> v
        count += 1
    npiv = _reduce_rows(buf, count, piv_row, piv_bit, 0)
    for i in range(npiv):
        for j in range(npiv):
            if i != j and (piv_row[j] >> piv_bit[i]) & 1:
                piv_row[j] ^= piv_row[i]
    order = sorted(range(npiv), key=lambda t: -piv_bit[t])
    return tuple(int(piv_row[t]) for t in order)


def enumerate_rref(int n, int k):
    """All canonical RREF row-tuples of k-dimensional subspaces of F2^n."""
    if k == 0:
        return [()]
    if n > 24 or k > n:
        raise ValueError("enumeration needs 0 <= k <= n <= 24")
    cdef uint64_t base[24]
    cdef uint64_t rows[24]
    cdef int pos_row[600]
    cdef uint64_t pos_bit[600]
    cdef int npos, r, i, c
    cdef uint64_t mask, total
    out = []
    for pivots in combinations(range(n), k):
        pivot_set = set(pivots)
        npos = 0
        for r in range(k):
            for c in range(pivots[r] + 1, n):
                if c not in pivot_set:
                    pos_row[npos] = r
                    pos_bit[npos] = (<uint64_t> 1) << (n - 1 - c)
                    npos += 1
        for r in range(k):
            base[r] = (<uint64_t> 1) << (n - 1 - pivots[r])
        total = (<uint64_t> 1) << npos
        mask = 0
        while mask < total:
            for r in range(k):
                rows[r] = base[r]
            for i in range(npos):
                if (mask >> i) & 1:
                    rows[pos_row[i]] |= pos_bit[i]
            out.append(tuple(int(rows[r]) for r in range(k)))
            mask += 1
    return out


def count_decomposable_nonzero(int n):
    """Number of non-zero alternating classes on n letters whose
    coefficient matrix has rank <= 2 over GF(2)."""
    if n > 8:
        raise ValueError("scan is capped at 8 letters (2^28 classes)")
    cdef int pi[28]
    cdef int pj[28]
    cdef int m = 0
    cdef int i, j, idx, r
    for i in range(n):
        for j in range(i + 1, n):
            pi[m] = i
            pj[m] = j
            m += 1
    cdef uint64_t w, total = (<uint64_t> 1) << m
    cdef uint64_t rows[8]
    cdef uint64_t piv_row[8]
    cdef int piv_bit[8]
    cdef uint64_t count = 0
    w = 1
    with nogil:
        while w < total:
            for i in range(n):
                rows[i] = 0
            for idx in range(m):
                if (w >> idx) & 1:
                    rows[pi[idx]] |= (<uint64_t> 1) << pj[idx]
                    rows[pj[idx]] |= (<uint64_t> 1) << pi[idx]
            r = _reduce_rows(rows, n, piv_row, piv_bit, 2)
            if r <= 2:
                count += 1
            w += 1
    return int(count)
