# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: bit-packed GF(2) rank and bounded-integer hull loops.

Numeric entry points return None whenever an input or output would not fit
comfortably in 64-bit machine integers; the dispatcher then re-runs the call
on the pure-Python twin, so results never depend on the backend.
"""

import array

from cpython cimport array
from libc.stdint cimport int64_t, uint64_t

BACKEND = "cython"

cdef extern from *:
    ctypedef long long int128 "__int128"

DEF INPUT_BOUND = 36028797018963968      # 2**55
cdef int64_t OUTPUT_BOUND = 9223372036854775807


cdef int _fill_i64(object values, int64_t* out, Py_ssize_t count) except -1:
    cdef Py_ssize_t i
    cdef object v
    cdef int64_t x
    for i in range(count):
        v = values[i]
        x = v  # raises OverflowError past 64 bits
        if x > INPUT_BOUND or x < -INPUT_BOUND:
            return 1
        out[i] = x
    return 0


def gf2_rank_bitrows(rows, ncols):
    """Rank over GF(2) of int-bitset rows; never refuses an input."""
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t nc = ncols
    if nrows == 0 or nc <= 0:
        return 0
    cdef Py_ssize_t nwords = (nc + 63) >> 6
    packed = bytearray()
    cdef Py_ssize_t stride = nwords * 8
    for r in rows:
        packed += int(r).to_bytes(stride, "little")
    cdef array.array arr = array.array('Q')
    arr.frombytes(bytes(packed))
    cdef uint64_t[::1] mv = arr
    cdef Py_ssize_t rank = 0, col, w, r2, j, piv
    cdef int bit
    cdef uint64_t tmp
    with nogil:
        for col in range(nc):
            w = col >> 6
            bit = col & 63
            piv = -1
            for r2 in range(rank, nrows):
                if (mv[r2 * nwords + w] >> bit) & 1:
                    piv = r2
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(w, nwords):
                    tmp = mv[rank * nwords + j]
                    mv[rank * nwords + j] = mv[piv * nwords + j]
                    mv[piv * nwords + j] = tmp
            for r2 in range(rank + 1, nrows):
                if (mv[r2 * nwords + w] >> bit) & 1:
                    for j in range(w, nwords):
                        mv[r2 * nwords + j] ^= mv[rank * nwords + j]
            rank += 1
            if rank == nrows:
                break
    return rank


def affine_values(flat, k, m, u, c):
    """<u, a_i> + c per point, or None if the integers do not fit."""
    cdef Py_ssize_t kk = k, mm = m, i, j
    if mm > 32:
        return None
    cdef int64_t uu[32]
    cdef int64_t cc
    cdef array.array fa = array.array('q')
    try:
        if _fill_i64(u, uu, mm):
            return None
        cc = c
        if cc > INPUT_BOUND or cc < -INPUT_BOUND:
            return None
        fa.extend(flat)
    except OverflowError:
        return None
    cdef int64_t[::1] fv = fa
    for i in range(kk * mm):
        if fv[i] > INPUT_BOUND or fv[i] < -INPUT_BOUND:
            return None
    out = [0] * kk
    cdef int128 acc
    cdef Py_ssize_t pos = 0
    for i in range(kk):
        acc = cc
        for j in range(mm):
            acc += <int128> uu[j] * fv[pos + j]
        pos += mm
        if acc > OUTPUT_BOUND or acc < -OUTPUT_BOUND:
            return None
        out[i] = <int64_t> acc
    return out


def slack_vector(flat, k, m, heights, w, delta, b):
    """delta*h_i - <w, a_i> - b per point, or None if the integers do not fit."""
    cdef Py_ssize_t kk = k, mm = m, i, j
    if mm > 32:
        return None
    cdef int64_t ww[32]
    cdef int64_t dd, bb
    cdef array.array fa = array.array('q')
    cdef array.array ha = array.array('q')
    try:
        if _fill_i64(w, ww, mm):
            return None
        dd = delta
        bb = b
        if (dd > INPUT_BOUND or dd < -INPUT_BOUND
                or bb > INPUT_BOUND or bb < -INPUT_BOUND):
            return None
        fa.extend(flat)
        ha.extend(heights)
    except OverflowError:
        return None
    cdef int64_t[::1] fv = fa
    cdef int64_t[::1] hv = ha
    for i in range(kk * mm):
        if fv[i] > INPUT_BOUND or fv[i] < -INPUT_BOUND:
            return None
    for i in range(kk):
        if hv[i] > INPUT_BOUND or hv[i] < -INPUT_BOUND:
            return None
    out = [0] * kk
    cdef int128 acc
    cdef Py_ssize_t pos = 0
    for i in range(kk):
        acc = <int128> dd * hv[i] - bb
        for j in range(mm):
            acc -= <int128> ww[j] * fv[pos + j]
        pos += mm
        if acc > OUTPUT_BOUND or acc < -OUTPUT_BOUND:
            return None
        out[i] = <int64_t> acc
    return out
