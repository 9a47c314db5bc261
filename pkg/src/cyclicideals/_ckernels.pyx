# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops over path bitmasks (at most 64 paths per quiver)."""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int32_t
from libc.stdlib cimport malloc, realloc, free

cnp.import_array()

ctypedef cnp.uint64_t u64


cdef inline uint64_t _mul(uint64_t a, uint64_t b, const int32_t* start,
                          const int32_t* left, const int32_t* right, int n_paths) noexcept nogil:
    cdef uint64_t res = 0, inter = a & b
    cdef int g, s
    for g in range(n_paths):
        if not (inter >> g) & 1:
            continue
        for s in range(start[g], start[g + 1]):
            if (a >> left[s]) & 1 and (b >> right[s]) & 1:
                res |= (<uint64_t>1) << g
                break
    return res


def multiply(u64 a, u64 b, const int32_t[::1] start, const int32_t[::1] left,
             const int32_t[::1] right):
    cdef int n_paths = start.shape[0] - 1
    return _mul(a, b, &start[0], &left[0], &right[0], n_paths)


def multiply_row(u64 a, const u64[::1] bs, const int32_t[::1] start,
                 const int32_t[::1] left, const int32_t[::1] right):
    cdef Py_ssize_t m = bs.shape[0], j
    cdef int n_paths = start.shape[0] - 1
    out = np.empty(m, dtype=np.uint64)
    cdef u64[::1] o = out
    with nogil:
        for j in range(m):
            o[j] = _mul(a, bs[j], &start[0], &left[0], &right[0], n_paths)
    return out


def multiply_col(const u64[::1] as_, u64 b, const int32_t[::1] start,
                 const int32_t[::1] left, const int32_t[::1] right):
    cdef Py_ssize_t m = as_.shape[0], j
    cdef int n_paths = start.shape[0] - 1
    out = np.empty(m, dtype=np.uint64)
    cdef u64[::1] o = out
    with nogil:
        for j in range(m):
            o[j] = _mul(as_[j], b, &start[0], &left[0], &right[0], n_paths)
    return out


cdef struct _Buf:
    uint64_t* data
    Py_ssize_t size
    Py_ssize_t capacity
    Py_ssize_t cap
    int overflow


cdef int _push(_Buf* buf, uint64_t v) noexcept nogil:
    cdef uint64_t* grown
    if buf.size >= buf.cap:
        buf.overflow = 1
        return -1
    if buf.size == buf.capacity:
        buf.capacity = buf.capacity * 2 + 16
        grown = <uint64_t*>realloc(buf.data, buf.capacity * sizeof(uint64_t))
        if grown == NULL:
            buf.overflow = 2
            return -1
        buf.data = grown
    buf.data[buf.size] = v
    buf.size += 1
    return 0


cdef int _upsets(int i, uint64_t s, const int32_t* order, const uint64_t* covers,
                 int n, _Buf* buf) noexcept nogil:
    if i == n:
        return _push(buf, s)
    cdef int p = order[i]
    if _upsets(i + 1, s, order, covers, n, buf) < 0:
        return -1
    if (covers[p] & ~s) == 0:
        return _upsets(i + 1, s | ((<uint64_t>1) << p), order, covers, n, buf)
    return 0


def upsets(const int32_t[::1] order, const u64[::1] covers, Py_ssize_t cap):
    """All up-closed subsets; ``order`` must list every element after its upper covers."""
    cdef _Buf buf
    buf.data = NULL
    buf.size = 0
    buf.capacity = 0
    buf.cap = cap
    buf.overflow = 0
    cdef int n = order.shape[0]
    with nogil:
        _upsets(0, 0, &order[0] if n else NULL, &covers[0] if n else NULL, n, &buf)
    try:
        if buf.overflow == 1:
            raise OverflowError(f"more than {cap} up-sets")
        if buf.overflow == 2:
            raise MemoryError()
        out = np.empty(buf.size, dtype=np.uint64)
        for i in range(buf.size):
            out[i] = buf.data[i]
        return out
    finally:
        free(buf.data)
