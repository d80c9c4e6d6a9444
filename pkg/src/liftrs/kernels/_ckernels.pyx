# cython: language_level=3
"""Compiled twins of the kernels in ``_pure.py`` (same signatures, same results)."""

import numpy as np

from libc.stdint cimport int64_t, uint32_t, uint64_t


cdef bint _reachable(const int* profile, int ell, int64_t target) noexcept nogil:
    cdef uint64_t carries = 1, new, mask
    cdef int b, tb, nb, c, s, start
    if target < 0:
        return False
    for b in range(ell):
        tb = (target >> b) & 1
        nb = profile[b]
        new = 0
        mask = carries
        c = 0
        while mask:
            if mask & 1:
                start = c + ((tb - c) & 1)
                s = start
                while s <= c + nb:
                    new |= (<uint64_t>1) << (s >> 1)
                    s += 2
            mask >>= 1
            c += 1
        carries = new
        if carries == 0:
            return False
    target >>= ell
    if target >= 64:
        return False
    return (carries >> target) & 1


def reachable_exact(profile, int ell, int64_t target):
    cdef int buf[64]
    cdef int b
    for b in range(ell):
        buf[b] = profile[b]
    return bool(_reachable(buf, ell, target))


cdef inline void _profile_of(const int* digits, int m, int ell, int* profile) noexcept nogil:
    cdef int b, i
    for b in range(ell):
        profile[b] = 0
    for i in range(m):
        for b in range(ell):
            profile[b] += (digits[i] >> b) & 1


cdef inline void _advance(int* digits, int m, int q) noexcept nogil:
    # lexicographic successor; last coordinate varies fastest
    cdef int i = m - 1
    while i >= 0:
        digits[i] += 1
        if digits[i] < q:
            return
        digits[i] = 0
        i -= 1


cdef int64_t _cache_size(int ell, int m):
    # number of distinct popcount profiles, or -1 when too many to cache
    cdef int64_t size = 1
    cdef int b
    for b in range(ell):
        size *= m + 1
        if size > CACHE_LIMIT:
            return -1
    return size


cdef inline int64_t _profile_key(const int* profile, int ell, int m) noexcept nogil:
    cdef int64_t key = 0
    cdef int b
    for b in range(ell - 1, -1, -1):
        key = key * (m + 1) + profile[b]
    return key


cdef int64_t CACHE_LIMIT = 1 << 22
cdef uint32_t UNSET = 0xFFFFFFFF


def sj_flags(int ell, int m, int r):
    if m > 32 or m < 1:
        raise ValueError("m must be in 1..32")
    cdef int64_t q = 1 << ell
    cdef int64_t total = q ** m
    out = np.zeros(total, dtype=np.uint32)
    cdef uint32_t[:] view = out
    # vectors with the same per-bit popcounts share their flags
    cdef int64_t csize = _cache_size(ell, m)
    cache_arr = np.full(max(csize, 1), UNSET, dtype=np.uint32)
    cdef uint32_t[:] cache = cache_arr
    cdef int digits[32]
    cdef int profile[64]
    cdef int64_t idx, key = 0
    cdef int i, j
    cdef uint32_t bits
    for i in range(m):
        digits[i] = 0
    with nogil:
        for idx in range(total):
            _profile_of(digits, m, ell, profile)
            if csize > 0:
                key = _profile_key(profile, ell, m)
                bits = cache[key]
            else:
                bits = UNSET
            if bits == UNSET:
                bits = 0
                for j in range(m):
                    if _reachable(profile, ell, (q - r) + j * q):
                        bits |= (<uint32_t>1) << j
                if csize > 0:
                    cache[key] = bits
            view[idx] = bits
            _advance(digits, m, <int>q)
    return out


def dstar_bad_flags(int ell, int m, int deg_bound):
    if m > 32 or m < 1:
        raise ValueError("m must be in 1..32")
    cdef int64_t q = 1 << ell
    cdef int64_t total = q ** m
    targets_list = [t for t in range(1, m * (q - 1) + 1) if (t - 1) % (q - 1) + 1 >= deg_bound]
    targets_arr = np.array(targets_list, dtype=np.int64)
    cdef int64_t[:] targets = targets_arr
    cdef Py_ssize_t nt = targets_arr.shape[0]
    out = np.zeros(total, dtype=np.uint8)
    cdef unsigned char[:] view = out
    cdef int64_t csize = _cache_size(ell, m)
    cache_arr = np.full(max(csize, 1), 2, dtype=np.uint8)
    cdef unsigned char[:] cache = cache_arr
    cdef unsigned char hit
    cdef int64_t key = 0
    cdef int digits[32]
    cdef int profile[64]
    cdef int64_t idx
    cdef Py_ssize_t k
    cdef int i
    for i in range(m):
        digits[i] = 0
    with nogil:
        for idx in range(total):
            _profile_of(digits, m, ell, profile)
            if csize > 0:
                key = _profile_key(profile, ell, m)
                hit = cache[key]
            else:
                hit = 2
            if hit == 2:
                hit = 0
                for k in range(nt):
                    if _reachable(profile, ell, targets[k]):
                        hit = 1
                        break
                if csize > 0:
                    cache[key] = hit
            view[idx] = hit
            _advance(digits, m, <int>q)
    return out


def rref_pivots(matrix, exp, log, int q):
    a_arr = np.array(matrix, dtype=np.int64, copy=True)
    if a_arr.ndim != 2:
        raise ValueError("matrix must be two-dimensional")
    exp_arr = np.ascontiguousarray(exp, dtype=np.int64)
    log_arr = np.ascontiguousarray(log, dtype=np.int64)
    cdef int64_t[:, :] a = a_arr
    cdef const int64_t[:] ex = exp_arr
    cdef const int64_t[:] lg = log_arr
    cdef Py_ssize_t rows = a.shape[0], cols = a.shape[1]
    cdef Py_ssize_t rank = 0, col, i, k, p
    cdef int64_t order = q - 1, shift, f, lf, tmp
    pivots = []
    with nogil:
        for col in range(cols):
            if rank == rows:
                break
            p = -1
            for i in range(rank, rows):
                if a[i, col] != 0:
                    p = i
                    break
            if p < 0:
                continue
            if p != rank:
                for k in range(cols):
                    tmp = a[p, k]
                    a[p, k] = a[rank, k]
                    a[rank, k] = tmp
            shift = order - lg[a[rank, col]]
            for k in range(col, cols):
                if a[rank, k] != 0:
                    a[rank, k] = ex[(lg[a[rank, k]] + shift) % order]
            for i in range(rank + 1, rows):
                f = a[i, col]
                if f == 0:
                    continue
                lf = lg[f]
                for k in range(col, cols):
                    if a[rank, k] != 0:
                        a[i, k] ^= ex[lf + lg[a[rank, k]]]
            with gil:
                pivots.append(col)
            rank += 1
    return int(rank), pivots
