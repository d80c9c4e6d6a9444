"""Classification and counting of exponent vectors of m-variate monomials.

Two notions of badness are implemented, each with two interchangeable
engines: ``"oracle"`` enumerates every submask ``i <=_2 d`` explicitly and
``"dp"`` runs a digit DP over bit positions that tracks the carry of the
component sum.  The oracle is kept permanently as the cross-check.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import numpy as np

from . import kernels

# exhaustive enumerations refuse to go past this many exponent vectors
MAX_ENUMERATION = 1 << 24


def _require_power_of_two(q: int) -> int:
    if q < 2 or q & (q - 1):
        raise ValueError(f"q must be a power of two >= 2, got {q}")
    return q.bit_length() - 1


@dataclass(frozen=True)
class ExponentVector:
    """Exponents ``(d_1, ..., d_m)`` of a monomial over GF(q)."""

    components: tuple[int, ...]
    q: int

    def __post_init__(self):
        _require_power_of_two(self.q)
        comps = tuple(int(c) for c in self.components)
        if not comps:
            raise ValueError("exponent vector needs at least one component")
        for c in comps:
            if not 0 <= c < self.q:
                raise ValueError(f"exponent {c} outside [0, {self.q - 1}]")
        object.__setattr__(self, "components", comps)

    @property
    def m(self) -> int:
        return len(self.components)

    @property
    def ell(self) -> int:
        return self.q.bit_length() - 1

    @property
    def deg(self) -> int:
        return sum(self.components)

    @property
    def weight(self) -> int:
        return sum(1 for c in self.components if c)

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def __getitem__(self, i):
        return self.components[i]


def _as_vector(d, q: Optional[int] = None) -> ExponentVector:
    if isinstance(d, ExponentVector):
        if q is not None and q != d.q:
            raise ValueError(f"vector over q={d.q} used with q={q}")
        return d
    if q is None:
        raise ValueError("q is required when passing a plain tuple")
    return ExponentVector(tuple(d), q)


@dataclass(frozen=True)
class BadnessVerdict:
    is_bad: bool
    witness: Optional[ExponentVector] = None

    def __bool__(self):
        return self.is_bad


@dataclass(frozen=True)
class CountVector:
    """``s[j]`` = number of exponent vectors in S_j for the given parameters."""

    s: tuple[int, ...]
    ell: int
    m: int
    r: int

    def __getitem__(self, j):
        return self.s[j]

    def __len__(self):
        return len(self.s)


# -- binary partial order ----------------------------------------------------


def le2(a: int, b: int) -> bool:
    """True iff every set bit of ``a`` is set in ``b``."""
    if a < 0 or b < 0:
        raise ValueError("le2 is defined on non-negative integers")
    return (a & b) == a


def le2_vec(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b):
        raise ValueError("vectors differ in length")
    return all(le2(x, y) for x, y in zip(a, b))


def mods_q(a: int, q: int) -> int:
    """Reduce an exponent into Z_q so that T^a == T^result on GF(q)."""
    _require_power_of_two(q)
    if a < 0:
        raise ValueError("exponent must be non-negative")
    if a == 0:
        return 0
    return (a - 1) % (q - 1) + 1


def lucas_subset(d: int, i: int) -> int:
    """binom(d, i) mod 2 as the product of its per-bit binomials."""
    if d < 0 or i < 0:
        raise ValueError("arguments must be non-negative")
    result = 1
    while d or i:
        db, ib = d & 1, i & 1
        result *= math.comb(db, ib)
        d >>= 1
        i >>= 1
    return result % 2


def submasks(a: int) -> Iterator[int]:
    """All ``x <=_2 a``, in decreasing order, ending with 0."""
    x = a
    while True:
        yield x
        if x == 0:
            return
        x = (x - 1) & a


# -- digit DP with witness -----------------------------------------------------


def _profile(d: Sequence[int], ell: int) -> list[int]:
    return [sum((c >> b) & 1 for c in d) for b in range(ell)]


def exact_sum_witness(d: Sequence[int], ell: int, target: int) -> Optional[tuple[int, ...]]:
    """A submask of ``d`` whose components sum to ``target``, or None.

    Carry DP over bit positions: at bit b any count 0..n_b of the components
    having that bit may be kept.  Back-pointers record the count used.
    """
    if target < 0:
        return None
    prof = _profile(d, ell)
    layers = [{0: None}]
    for b in range(ell):
        tb = (target >> b) & 1
        nxt: dict[int, tuple[int, int]] = {}
        for c in layers[-1]:
            for k in range(prof[b] + 1):
                s = c + k
                if (s & 1) == tb and (s >> 1) not in nxt:
                    nxt[s >> 1] = (c, k)
        if not nxt:
            return None
        layers.append(nxt)
    carry = target >> ell
    if carry not in layers[-1]:
        return None
    counts = [0] * ell
    for b in range(ell, 0, -1):
        prev, k = layers[b][carry]
        counts[b - 1] = k
        carry = prev
    out = [0] * len(d)
    for b, k in enumerate(counts):
        for idx, c in enumerate(d):
            if k == 0:
                break
            if (c >> b) & 1:
                out[idx] |= 1 << b
                k -= 1
    return tuple(out)


def _targets_dstar(q: int, m: int, deg_bound: int) -> list[int]:
    return [t for t in range(1, m * (q - 1) + 1) if mods_q(t, q) >= deg_bound]


def _targets_qr(q: int, m: int, r: int) -> list[int]:
    return [t for t in range(0, m * (q - 1) + 1) if t % q == (q - r) % q]


def _classify(d: ExponentVector, targets: list[int], engine: str) -> BadnessVerdict:
    wanted = set(targets)
    if engine == "oracle":
        for i in itertools.product(*(submasks(c) for c in d.components)):
            if sum(i) in wanted:
                return BadnessVerdict(True, ExponentVector(i, d.q))
        return BadnessVerdict(False)
    if engine == "dp":
        for t in targets:
            w = exact_sum_witness(d.components, d.ell, t)
            if w is not None:
                return BadnessVerdict(True, ExponentVector(w, d.q))
        return BadnessVerdict(False)
    raise ValueError(f"unknown engine {engine!r}")


def is_dstar_bad(d, deg_bound: int, q: Optional[int] = None, engine: str = "dp") -> BadnessVerdict:
    """Some ``i <=_2 d`` has ``mods_q(deg(i))`` in ``[deg_bound, q-1]``."""
    d = _as_vector(d, q)
    if not 1 <= deg_bound < d.q:
        raise ValueError(f"deg_bound must be in [1, {d.q - 1}], got {deg_bound}")
    return _classify(d, _targets_dstar(d.q, d.m, deg_bound), engine)


def is_qr_bad(d, r: int, q: Optional[int] = None, engine: str = "dp") -> BadnessVerdict:
    """Some ``i <=_2 d`` has ``deg(i) == q - r (mod q)``."""
    d = _as_vector(d, q)
    if not 1 <= r <= d.q:
        raise ValueError(f"r must be in [1, {d.q}], got {r}")
    return _classify(d, _targets_qr(d.q, d.m, r), engine)


# -- enumeration of S_j ----------------------------------------------------------


def _check_scale(ell: int, m: int):
    if ell < 1 or m < 1:
        raise ValueError("ell and m must be positive")
    if m * ell > MAX_ENUMERATION.bit_length() - 1:
        raise ValueError(f"q^m = 2^{m * ell} exceeds the enumeration limit 2^24")


def all_vectors(ell: int, m: int) -> Iterator[tuple[int, ...]]:
    """Every exponent vector of Z_q^m in lexicographic order."""
    return itertools.product(range(1 << ell), repeat=m)


def sj_flags(ell: int, m: int, r: int) -> np.ndarray:
    """Per-vector bitmask (bit j set iff the vector lies in S_j), lex order."""
    q = 1 << ell
    if not 1 <= r <= min(m, q):
        raise ValueError(f"r must be in [1, min(m, q)] = [1, {min(m, q)}], got {r}")
    if m > 32:
        raise ValueError("m must be at most 32")
    _check_scale(ell, m)
    return kernels.sj_flags(ell, m, r)


def enumerate_sj(ell: int, m: int, r: int) -> CountVector:
    """Count S_0..S_{m-1} by classifying every vector of Z_q^m."""
    flags = sj_flags(ell, m, r)
    s = tuple(int(np.count_nonzero(flags & np.uint32(1 << j))) for j in range(m))
    return CountVector(s, ell, m, r)


def enumerate_sj_oracle(ell: int, m: int, r: int) -> CountVector:
    """Same counts as :func:`enumerate_sj` via explicit submask enumeration."""
    q = 1 << ell
    if not 1 <= r <= min(m, q):
        raise ValueError(f"r must be in [1, min(m, q)], got {r}")
    _check_scale(ell, m)
    counts = [0] * m
    for d in all_vectors(ell, m):
        sums = {sum(i) for i in itertools.product(*(submasks(c) for c in d))}
        for j in range(m):
            if (q - r) + j * q in sums:
                counts[j] += 1
    return CountVector(tuple(counts), ell, m, r)


def sj_set(ell: int, m: int, r: int, j: int) -> list[tuple[int, ...]]:
    """Members of S_j in lexicographic order."""
    flags = sj_flags(ell, m, r)
    idx = np.flatnonzero(flags & np.uint32(1 << j)) if j < m else []
    q = 1 << ell
    out = []
    for n in idx:
        n = int(n)
        digits = []
        for _ in range(m):
            digits.append(n % q)
            n //= q
        out.append(tuple(reversed(digits)))
    return out


def dstar_bad_flags(ell: int, m: int, deg_bound: int) -> np.ndarray:
    _check_scale(ell, m)
    if not 1 <= deg_bound < (1 << ell):
        raise ValueError("deg_bound out of range")
    return kernels.dstar_bad_flags(ell, m, deg_bound)


# -- leading-bit maps and the weight reduction procedure ----------------------------


def f_drop(a, ell: Optional[int] = None):
    """Clear bit ``ell-1`` of every component."""
    if isinstance(a, ExponentVector):
        top = 1 << (a.ell - 1)
        return ExponentVector(tuple(c & ~top for c in a), a.q)
    top = 1 << (ell - 1)
    return tuple(c & ~top for c in a)


def f_lead(a, ell: Optional[int] = None):
    """Bit ``ell-1`` of every component, as a 0/1 vector."""
    if isinstance(a, ExponentVector):
        return tuple((c >> (a.ell - 1)) & 1 for c in a)
    return tuple((c >> (ell - 1)) & 1 for c in a)


def reduce_degree(i, j: int, l: int, ell: int) -> tuple[int, ...]:
    """Zero bits of ``i``, most significant first, to lower deg by (j-l)*2^ell.

    Requires ``deg(i) >= j * 2**ell`` and ``0 <= l <= j``.  The result ``a``
    satisfies ``a <=_2 i`` and ``deg(a) == deg(i) - (j - l) * 2**ell``.
    """
    comps = [int(c) for c in (i.components if isinstance(i, ExponentVector) else i)]
    q = 1 << ell
    if any(not 0 <= c < q for c in comps):
        raise ValueError(f"components must lie in [0, {q - 1}]")
    if not 0 <= l <= j:
        raise ValueError("need 0 <= l <= j")
    if sum(comps) < j * q:
        raise ValueError(f"deg(i) = {sum(comps)} is below j*2^ell = {j * q}")

    a = comps
    delta = j - l
    h = ell
    while h > 0:
        h -= 1
        delta *= 2
        ones = [xi for xi in range(len(a)) if (a[xi] >> h) & 1]
        slack = delta - len(ones)
        if slack > 0:
            # clear the whole bit plane; the remaining deficit carries down
            for xi in ones:
                a[xi] &= ~(1 << h)
            delta = slack
            continue
        # first `delta` components holding bit h are enough
        for xi in ones[:delta]:
            a[xi] &= ~(1 << h)
        return tuple(a)
    if delta == 0:
        return tuple(a)
    raise AssertionError("degree reduction ran out of bits")  # excluded by the precondition
