"""Reference (numpy) implementations of the hot kernels.

Every function here has a twin with the same signature in ``_ckernels.pyx``.
Exponent vectors are indexed lexicographically: ``d = (d_1, ..., d_m)`` sits at
``sum(d_i * q**(m - i))``.
"""

from __future__ import annotations

import numpy as np


def reachable_exact(profile, ell: int, target: int) -> bool:
    """Can a submask of ``d`` have component sum exactly ``target``?

    ``profile[b]`` is the number of components of ``d`` with bit ``b`` set; a
    submask may keep any number ``0..profile[b]`` of those bits, so the sum is
    built bit by bit while tracking the set of possible carries (a bitmask).
    """
    if target < 0:
        return False
    carries = 1
    for b in range(ell):
        tb = (target >> b) & 1
        nb = profile[b]
        new = 0
        c = 0
        mask = carries
        while mask:
            if mask & 1:
                # sums c..c+nb whose low bit matches the target bit
                start = c + ((tb - c) & 1)
                for s in range(start, c + nb + 1, 2):
                    new |= 1 << (s >> 1)
            mask >>= 1
            c += 1
        carries = new
        if not carries:
            return False
    high = target >> ell
    return bool((carries >> high) & 1)


def _profile_keys(ell: int, m: int):
    """Packed bit-count profile of every exponent vector, in lex order.

    Component ``v`` contributes ``sum_b bit_b(v) * (m+1)**b``; counts never
    exceed ``m`` so the packed sum is collision free.
    """
    q = 1 << ell
    base = m + 1
    v = np.arange(q, dtype=np.int64)
    per_value = np.zeros(q, dtype=np.int64)
    for b in range(ell):
        per_value += ((v >> b) & 1) * base**b
    keys = np.zeros(1, dtype=np.int64)
    for _ in range(m):
        keys = (keys[:, None] + per_value[None, :]).reshape(-1)
    return keys


def _unpack(key: int, ell: int, m: int) -> list[int]:
    base = m + 1
    out = []
    for _ in range(ell):
        out.append(key % base)
        key //= base
    return out


def sj_flags(ell: int, m: int, r: int) -> np.ndarray:
    """Bit ``j`` of entry ``d`` is set iff some submask of d sums to (q-r)+jq."""
    q = 1 << ell
    keys = _profile_keys(ell, m)
    uniq, inverse = np.unique(keys, return_inverse=True)
    verdict = np.zeros(len(uniq), dtype=np.uint32)
    for n, key in enumerate(uniq):
        profile = _unpack(int(key), ell, m)
        bits = 0
        for j in range(m):
            if reachable_exact(profile, ell, (q - r) + j * q):
                bits |= 1 << j
        verdict[n] = bits
    return verdict[inverse.reshape(-1)]


def dstar_targets(ell: int, m: int, deg_bound: int) -> list[int]:
    """Sums t in [1, m(q-1)] whose mod* q reduction lies in [deg_bound, q-1]."""
    q = 1 << ell
    return [t for t in range(1, m * (q - 1) + 1) if (t - 1) % (q - 1) + 1 >= deg_bound]


def dstar_bad_flags(ell: int, m: int, deg_bound: int) -> np.ndarray:
    targets = dstar_targets(ell, m, deg_bound)
    keys = _profile_keys(ell, m)
    uniq, inverse = np.unique(keys, return_inverse=True)
    verdict = np.zeros(len(uniq), dtype=np.uint8)
    for n, key in enumerate(uniq):
        profile = _unpack(int(key), ell, m)
        verdict[n] = any(reachable_exact(profile, ell, t) for t in targets)
    return verdict[inverse.reshape(-1)]


def rref_pivots(matrix, exp, log, q: int):
    """Row-echelon reduction over GF(q); returns (rank, pivot columns).

    ``exp`` is the doubled antilog table and ``log`` the log table of the
    field, as exposed by :class:`~liftrs.finite_field.FieldSpec`.  Pivot
    columns are the lexicographically first independent column set.
    """
    a = np.array(matrix, dtype=np.int64, copy=True)
    if a.ndim != 2:
        raise ValueError("matrix must be two-dimensional")
    exp = np.asarray(exp, dtype=np.int64)
    log = np.asarray(log, dtype=np.int64)
    order = q - 1
    rows, cols = a.shape
    rank = 0
    pivots = []
    for col in range(cols):
        if rank == rows:
            break
        nz = np.flatnonzero(a[rank:, col])
        if nz.size == 0:
            continue
        p = rank + int(nz[0])
        if p != rank:
            a[[rank, p]] = a[[p, rank]]
        # scale pivot row to a leading 1
        shift = order - log[a[rank, col]]
        row = a[rank]
        row = np.where(row == 0, 0, exp[(log[row] + shift) % order])
        a[rank] = row
        below = rank + 1 + np.flatnonzero(a[rank + 1 :, col])
        if below.size:
            factors = a[below, col]
            prod = exp[log[factors][:, None] + log[row][None, :]]
            prod[:, row == 0] = 0
            a[below] ^= prod
        pivots.append(col)
        rank += 1
    return rank, pivots
