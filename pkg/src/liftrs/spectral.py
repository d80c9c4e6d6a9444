"""Recurrence matrix for the S_j counts, its Perron eigenvalue, and the
redundancy exponents derived from it.

All logarithms are base two.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb

import numpy as np

from .monomials import enumerate_sj


class ConvergenceError(RuntimeError):
    pass


def binom_at_least(m: int, a: int) -> int:
    """Number of subsets of an m-set with at least ``a`` elements."""
    return sum(comb(m, w) for w in range(max(a, 0), m + 1))


def _binom(m: int, a: int) -> int:
    return comb(m, a) if 0 <= a <= m else 0


@dataclass(frozen=True)
class RecurrenceMatrix:
    m: int
    entries: tuple[tuple[int, ...], ...]

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.float64)

    def apply(self, s) -> tuple[int, ...]:
        """Exact integer product ``entries @ s``."""
        if len(s) != self.m:
            raise ValueError(f"expected a vector of length {self.m}")
        return tuple(sum(a * int(x) for a, x in zip(row, s)) for row in self.entries)


def build_recurrence_matrix(m: int) -> RecurrenceMatrix:
    """Row j maps s(ell) to s_j(ell+1).

    Column 0 holds binom(m, >= 2j+1); column c >= 1 holds binom(m, 2j+1-c).
    """
    if not 2 <= m <= 12:
        raise ValueError(f"m must be in 2..12, got {m}")
    rows = []
    for j in range(m):
        row = [binom_at_least(m, 2 * j + 1)]
        row += [_binom(m, 2 * j + 1 - c) for c in range(1, m)]
        rows.append(tuple(row))
    return RecurrenceMatrix(m, tuple(rows))


def dominant_eigenvalue(A, tol: float = 1e-9, max_iter: int = 100_000) -> float:
    """Power iteration from the all-ones vector with a Rayleigh-quotient stop."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    M = A.as_array() if isinstance(A, RecurrenceMatrix) else np.asarray(A, dtype=np.float64)
    x = np.ones(M.shape[0])
    x /= np.linalg.norm(x)
    prev = None
    for _ in range(max_iter):
        y = M @ x
        rq = float(x @ y)
        norm = np.linalg.norm(y)
        if norm == 0:
            raise ConvergenceError("iterate collapsed to zero")
        x = y / norm
        if prev is not None and abs(rq - prev) < tol:
            return rq
        prev = rq
    raise ConvergenceError(f"no convergence within {max_iter} iterations")


def p_m(m: int) -> float:
    """Convergence exponent implied by the earlier rate estimate for lifted RS codes."""
    if m < 2:
        raise ValueError("m must be at least 2")
    c = math.ceil(math.log2(m))
    return -math.log1p(-(2.0 ** (-m * c))) / math.log(2) / c


@dataclass(frozen=True)
class SpectralReport:
    m: int
    lambda_: float
    gap_exponent: float
    pm: float


def spectral_report(m: int) -> SpectralReport:
    lam = dominant_eigenvalue(build_recurrence_matrix(m))
    return SpectralReport(m, lam, m - math.log2(lam), p_m(m))


def verify_recurrence(m: int, r: int, ell_from: int, ell_to: int) -> bool:
    """s(ell+1) == A_m s(ell) exactly, with both sides counted by enumeration."""
    if ell_from > ell_to:
        raise ValueError("empty ell range")
    A = build_recurrence_matrix(m)
    counts = {ell: enumerate_sj(ell, m, r).s for ell in range(ell_from, ell_to + 1)}
    return all(A.apply(counts[ell]) == counts[ell + 1] for ell in range(ell_from, ell_to))


def propagate_counts(m: int, s, steps: int) -> tuple[int, ...]:
    """Apply the recurrence ``steps`` times to an exact count vector."""
    A = build_recurrence_matrix(m)
    s = tuple(int(x) for x in s)
    for _ in range(steps):
        s = A.apply(s)
    return s


def growth_ratios(m: int, r: int, ell_from: int, ell_to: int) -> list[float]:
    """s_0(ell+1) / s_0(ell) from enumeration, for ell in [ell_from, ell_to)."""
    s0 = [enumerate_sj(ell, m, r).s[0] for ell in range(ell_from, ell_to + 1)]
    return [b / a for a, b in zip(s0, s0[1:])]


def fit_growth_exponent(ells, counts) -> float:
    """Least-squares slope of log2(count) against ell."""
    slope, _ = np.polyfit(np.asarray(ells, float), np.log2(np.asarray(counts, float)), 1)
    return float(slope)


# -- exponent formulas ----------------------------------------------------------


def redundancy_exponent(m: int, eps: float) -> float:
    """Exponent of n in the redundancy bound for an n^eps batch code from an m-variate lift."""
    lo, hi = (m - 2) / m, (m - 1) / m
    if not lo <= eps <= hi:
        raise ValueError(f"eps must lie in [{lo:.6g}, {hi:.6g}] for m={m}")
    L = math.log2(dominant_eigenvalue(build_recurrence_matrix(m)))
    return (m - L) * eps + ((m - 1) * L / m - m + 2)


def figure_curve(m: int, lam: float, x: float) -> float:
    """The same exponent written in the plotting parameterisation (natural logs)."""
    return math.log(lam) / math.log(2**m) * (m - 1 - m * x) + m * x - (m - 2)


def g_exponent(eps: float, patience: int = 64, span: int = 10**6) -> tuple[float, int]:
    """min over integers b > 2/(1-eps) of 1 - (b(1-eps)-2)/(4b(b-1)).

    Returns ``(value, argmin b)``.  The scan stops once the minimand has risen
    for ``patience`` consecutive b, or after ``span`` candidates.
    """
    if not 0 <= eps < 1:
        raise ValueError("eps must lie in [0, 1)")
    c = 1 - eps
    start = math.floor(2 / c) + 1
    best, best_b = math.inf, start
    prev = math.inf
    rising = 0
    for b in range(start, start + span):
        val = 1 - (b * c - 2) / (4 * b * (b - 1))
        if val < best:
            best, best_b = val, b
        rising = rising + 1 if val > prev else 0
        if rising >= patience:
            break
        prev = val
    return best, best_b


def linear_exponent(eps: float) -> float:
    return (3 * eps + 1) / 2


def log3_exponent(eps: float) -> float:
    return math.log(3, 4) + (2 - math.log2(3)) * eps


@dataclass(frozen=True)
class ComparisonExponents:
    eps: float
    linear: float
    log3: float
    g: float
    g_argmin: int
    pm: float | None = None


def comparison_exponents(eps: float, m: int | None = None) -> ComparisonExponents:
    """Redundancy exponents of the earlier binary batch-code constructions."""
    if not 0 <= eps < 1:
        raise ValueError("eps must lie in [0, 1)")
    g, b = g_exponent(eps)
    return ComparisonExponents(
        eps=eps,
        linear=linear_exponent(eps),
        log3=log3_exponent(eps),
        g=g,
        g_argmin=b,
        pm=p_m(m) if m is not None else None,
    )
