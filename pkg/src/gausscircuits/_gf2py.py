"""Pure-Python GF(2) elimination kernels.

Rows are Python integers used as bit vectors (bit ``j`` = column ``j``);
the only row operation is XOR.  This module is the fallback backend for
:mod:`gausscircuits.gf2`; the compiled module ``_gf2fast`` implements the
same two functions.
"""

from __future__ import annotations

from typing import Optional, Sequence


def rank(rows: Sequence[int], n_rows: int, n_cols: int) -> int:
    """GF(2) row rank by forward elimination."""
    work = list(rows)
    r = 0
    for c in range(n_cols):
        bit = 1 << c
        piv = -1
        for i in range(r, n_rows):
            if work[i] & bit:
                piv = i
                break
        if piv < 0:
            continue
        work[r], work[piv] = work[piv], work[r]
        prow = work[r]
        for i in range(r + 1, n_rows):
            if work[i] & bit:
                work[i] ^= prow
        r += 1
        if r == n_rows:
            break
    return r


def inverse(rows: Sequence[int], n: int) -> Optional[list[int]]:
    """Inverse of an n x n GF(2) matrix, or None if singular.

    Gauss-Jordan on the augmented block [M | E]; the identity half lives in
    bits n..2n-1 of each working row.
    """
    work = [rows[i] | (1 << (n + i)) for i in range(n)]
    for c in range(n):
        bit = 1 << c
        piv = -1
        for i in range(c, n):
            if work[i] & bit:
                piv = i
                break
        if piv < 0:
            return None
        work[c], work[piv] = work[piv], work[c]
        prow = work[c]
        for i in range(n):
            if i != c and work[i] & bit:
                work[i] ^= prow
    return [row >> n for row in work]
