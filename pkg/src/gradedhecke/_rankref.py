"""Pure-Python reference kernel: matrix rank over GF(p).

Mirrors the Cython kernel in `_rankcore.pyx`; used when the compiled
extension is unavailable.  `p` must satisfy p < 2**31 so products fit
comfortably in machine words either way.
"""

from __future__ import annotations


def rank_mod_p(rows, p):
    """Rank of an integer matrix mod p. `rows` is a list of equal-length lists."""
    if not rows:
        return 0
    m = [[x % p for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        if row >= nrows:
            break
        piv = -1
        for r in range(row, nrows):
            if m[r][col]:
                piv = r
                break
        if piv < 0:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = pow(m[row][col], p - 2, p)
        prow = m[row]
        if inv != 1:
            for c in range(col, ncols):
                prow[c] = prow[c] * inv % p
        for r in range(nrows):
            if r != row and m[r][col]:
                f = m[r][col]
                mr = m[r]
                for c in range(col, ncols):
                    mr[c] = (mr[c] - f * prow[c]) % p
        row += 1
        rank += 1
    return rank
