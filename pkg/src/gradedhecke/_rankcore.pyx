# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernel: matrix rank over GF(p) by Gaussian elimination.

Entries and p fit in int64 with p < 2**31, so a*b stays below 2**62.
"""

import numpy as np


cdef long long _inv_mod(long long a, long long p):
    # extended Euclid
    cdef long long t = 0, newt = 1, r = p, newr = a % p, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt; t = newt; newt = tmp
        tmp = r - q * newr; r = newr; newr = tmp
    if t < 0:
        t += p
    return t


def rank_mod_p(rows, long long p):
    """Rank of an integer matrix mod p. `rows` is a list of equal-length lists."""
    if not rows:
        return 0
    arr = np.array(rows, dtype=np.int64) % p
    cdef long long[:, ::1] m = arr
    cdef Py_ssize_t nrows = m.shape[0], ncols = m.shape[1]
    cdef Py_ssize_t row = 0, col, r, c, piv
    cdef long long inv, f, v
    cdef int rank = 0
    for col in range(ncols):
        if row >= nrows:
            break
        piv = -1
        for r in range(row, nrows):
            if m[r, col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != row:
            for c in range(col, ncols):
                v = m[row, c]; m[row, c] = m[piv, c]; m[piv, c] = v
        inv = _inv_mod(m[row, col], p)
        if inv != 1:
            for c in range(col, ncols):
                m[row, c] = (m[row, c] * inv) % p
        for r in range(nrows):
            if r != row and m[r, col] != 0:
                f = m[r, col]
                for c in range(col, ncols):
                    m[r, c] = (m[r, c] - f * m[row, c]) % p
                    if m[r, c] < 0:
                        m[r, c] += p
        row += 1
        rank += 1
    return rank
