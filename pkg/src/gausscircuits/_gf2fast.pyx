# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(2) elimination kernels.

Same interface as ``_gf2py``: rows come in as Python integers, get packed
into flat uint64 word arrays, and the elimination loop runs in C.  Matrices
wider than 64 columns span several words per row.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc
from libc.stdint cimport uint64_t


cdef uint64_t* _pack(rows, Py_ssize_t n_rows, Py_ssize_t words) except NULL:
    cdef uint64_t* buf = <uint64_t*> PyMem_Malloc(n_rows * words * sizeof(uint64_t))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, w
    cdef object r
    for i in range(n_rows):
        r = rows[i]
        for w in range(words):
            buf[i * words + w] = <uint64_t> ((r >> (64 * w)) & 0xFFFFFFFFFFFFFFFF)
    return buf


cdef object _unpack_row(uint64_t* buf, Py_ssize_t base, Py_ssize_t words):
    cdef object r = 0
    cdef Py_ssize_t w
    for w in range(words - 1, -1, -1):
        r = (r << 64) | buf[base + w]
    return r


def rank(rows, Py_ssize_t n_rows, Py_ssize_t n_cols):
    """GF(2) row rank by forward elimination."""
    if n_rows == 0 or n_cols == 0:
        return 0
    cdef Py_ssize_t words = (n_cols + 63) >> 6
    cdef uint64_t* m = _pack(rows, n_rows, words)
    cdef Py_ssize_t r = 0, c, i, w, piv, wi
    cdef uint64_t bit, tmp
    try:
        for c in range(n_cols):
            wi = c >> 6
            bit = (<uint64_t> 1) << (c & 63)
            piv = -1
            for i in range(r, n_rows):
                if m[i * words + wi] & bit:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for w in range(words):
                    tmp = m[r * words + w]
                    m[r * words + w] = m[piv * words + w]
                    m[piv * words + w] = tmp
            for i in range(r + 1, n_rows):
                if m[i * words + wi] & bit:
                    for w in range(words):
                        m[i * words + w] ^= m[r * words + w]
            r += 1
            if r == n_rows:
                break
        return r
    finally:
        PyMem_Free(m)


def inverse(rows, Py_ssize_t n):
    """Inverse of an n x n GF(2) matrix, or None if singular."""
    if n == 0:
        return []
    cdef Py_ssize_t words = (2 * n + 63) >> 6
    cdef uint64_t* m = _pack(rows, n, words)
    cdef Py_ssize_t c, i, w, piv, wi, awi
    cdef uint64_t bit, tmp
    cdef object out
    try:
        for i in range(n):
            awi = (n + i) >> 6
            m[i * words + awi] |= (<uint64_t> 1) << ((n + i) & 63)
        for c in range(n):
            wi = c >> 6
            bit = (<uint64_t> 1) << (c & 63)
            piv = -1
            for i in range(c, n):
                if m[i * words + wi] & bit:
                    piv = i
                    break
            if piv < 0:
                return None
            if piv != c:
                for w in range(words):
                    tmp = m[c * words + w]
                    m[c * words + w] = m[piv * words + w]
                    m[piv * words + w] = tmp
            for i in range(n):
                if i != c and m[i * words + wi] & bit:
                    for w in range(words):
                        m[i * words + w] ^= m[c * words + w]
        out = [_unpack_row(m, i * words, words) >> n for i in range(n)]
        return out
    finally:
        PyMem_Free(m)
