"""Self-check suites driven by ``liftrs verify``.

Each suite raises on the first violated property.  ``quick`` keeps to q <= 8
and m <= 2; ``full`` adds the m = 3 and q = 16 suites.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from typing import Callable

from . import finite_field as ff
from . import kernels
from .batch import capacity, execute_batch, plan_batch
from .lifted_code import build_code, definitional_dimension, encode, index_point, is_codeword_bruteforce, restrict_to_line, Line
from .monomials import (
    all_vectors,
    dstar_bad_flags,
    enumerate_sj,
    is_dstar_bad,
    is_qr_bad,
    le2,
    lucas_subset,
    mods_q,
    sj_flags,
    sj_set,
)
from .rng import LCG64
from .spectral import build_recurrence_matrix, dominant_eigenvalue, figure_curve, p_m, redundancy_exponent, verify_recurrence

TABLE_LAMBDA = {
    2: 3.0000,
    3: 7.2361,
    4: 15.5436,
    5: 31.7877,
    6: 63.9217,
    7: 127.9763,
    8: 255.9939,
    9: 511.9986,
}

EXAMPLE_S0 = {(3, 0), (2, 1), (3, 1), (1, 2), (3, 2), (0, 3), (1, 3), (2, 3), (3, 3)}


def check(cond, msg):
    if not cond:
        raise AssertionError(msg)


def field_axioms(ells):
    for ell in ells:
        F = ff.make_field(ell)
        q = F.q
        els = range(q)
        for a in els:
            check(a ^ a == 0, "characteristic two")
            check(F.pow(a, q) == a, f"a^q != a for a={a}, q={q}")
            if a:
                check(F.pow(a, q - 1) == 1, f"a^(q-1) != 1 for a={a}")
                check(F.mul(a, F.inv(a)) == 1, f"bad inverse of {a}")
            for b in els:
                ab = F.mul(a, b)
                check(ab == F.mul_reference(a, b), f"table multiply differs at {a}*{b}")
                check(ab == F.mul(b, a), "multiplication not commutative")
                for c in els:
                    check(F.mul(ab, c) == F.mul(a, F.mul(b, c)), "multiplication not associative")
                    check(F.mul(a, b ^ c) == ab ^ F.mul(a, c), "distributivity fails")


def order_and_lucas():
    n = 64
    for a in range(n):
        check(le2(a, a), "le2 not reflexive")
        for b in range(n):
            if le2(a, b) and le2(b, a):
                check(a == b, "le2 not antisymmetric")
            check(lucas_subset(b, a) == math.comb(b, a) % 2, f"Lucas fails at ({b}, {a})")
            check(lucas_subset(b, a) == int(le2(a, b)), "Lucas disagrees with le2")
    for a, b, c in itertools.product(range(0, n, 3), range(n), range(n)):
        if le2(a, b) and le2(b, c):
            check(le2(a, c), "le2 not transitive")


def mods_soundness(qs):
    for q in qs:
        F = ff.make_field(q.bit_length() - 1)
        for a in range(3 * (q - 1) + 1):
            b = mods_q(a, q)
            for x in range(q):
                check(F.pow(x, a) == F.pow(x, b), f"T^{a} != T^{b} on GF({q})")


def dual_engines(cases):
    for q, m in cases:
        ell = q.bit_length() - 1
        for bound in range(1, q):
            flags = dstar_bad_flags(ell, m, bound)
            for n, d in enumerate(all_vectors(ell, m)):
                fast = is_dstar_bad(d, bound, q, engine="dp")
                slow = is_dstar_bad(d, bound, q, engine="oracle")
                check(fast.is_bad == slow.is_bad == bool(flags[n]), f"d*-engines disagree at {d}, bound {bound}")
        for r in range(1, q + 1):
            for d in all_vectors(ell, m):
                check(
                    is_qr_bad(d, r, q, engine="dp").is_bad == is_qr_bad(d, r, q, engine="oracle").is_bad,
                    f"(q-r)-engines disagree at {d}, r={r}",
                )
        for r in range(1, min(m, q) + 1):
            flags = sj_flags(ell, m, r)
            for j in range(1, m):
                check(((flags >> j) & 1 <= flags & 1).all(), f"S_{j} not inside S_0")


def s0_golden():
    s = enumerate_sj(2, 2, 1)
    check(s.s[0] == 9, f"s_0(2) = {s.s[0]}, expected 9")
    check(set(sj_set(2, 2, 1, 0)) == EXAMPLE_S0, "S_0(2) differs from the listed set")
    heavy_good = [d for d in all_vectors(2, 2) if sum(d) >= 3 and not is_qr_bad(d, 1, 4)]
    check(heavy_good == [(2, 2)], f"expected only (2, 2), got {heavy_good}")


def recurrences(cases):
    for m, r, lo, hi in cases:
        check(verify_recurrence(m, r, lo, hi), f"recurrence fails for m={m}, r={r}, ell {lo}..{hi}")


def spectral_checks():
    for m in range(2, 13):
        lam = dominant_eigenvalue(build_recurrence_matrix(m))
        check(2 ** (m - 1) <= lam <= 2**m, f"lambda_{m} = {lam} outside [2^(m-1), 2^m]")
        if m in TABLE_LAMBDA:
            check(abs(lam / TABLE_LAMBDA[m] - 1) < 1e-3, f"lambda_{m} = {lam} vs {TABLE_LAMBDA[m]}")
        if 3 <= m <= 9:
            check(m - math.log2(lam) > p_m(m), f"no improvement over p_{m}")


def basis_matches_definition(cases):
    for m, q in cases:
        for d in range(1, q):
            code = build_code(m, q, d)
            dim = definitional_dimension(m, q, d)
            check(dim == code.dimension, f"[{m},{d},{q}]: basis {code.dimension} vs definitional {dim}")
            for k in range(code.dimension):
                e = [0] * code.dimension
                e[k] = 1
                check(is_codeword_bruteforce(encode(code, e), m, q, d), f"monomial {code.basis[k]} fails a line")
            for e in all_vectors(code.ell, m):
                if sum(e) <= d - 1:
                    check(e in code.basis, f"RM monomial {e} missing")


def x1sq_x2sq_lines(lines=20, seed=5):
    code = build_code(2, 4, 3)
    F = code.field
    check((2, 2) in code.basis, "(2, 2) not in the [2,3,4] basis")
    k = code.basis.index((2, 2))
    w = encode(code, [int(i == k) for i in range(code.dimension)])
    rng = LCG64(seed)
    sq = lambda x: F.mul(x, x)
    done = 0
    while done < lines:
        a1, a2, b1, b2 = (rng.below(4) for _ in range(4))
        if a1 == a2 == 0:
            continue
        p = restrict_to_line(w, Line((a1, a2), (b1, b2)))
        want = (F.mul(sq(b1), sq(b2)), F.mul(sq(a1), sq(a2)), F.mul(sq(a1), sq(b2)) ^ F.mul(sq(a2), sq(b1)))
        check((p.coeff(0), p.coeff(1), p.coeff(2)) == want and p.degree <= 2, f"line {(a1, a2, b1, b2)} restriction {p}")
        done += 1


def batches(cases, seeds):
    for m, q, r in cases:
        code = build_code(m, q, q - r)
        k = capacity(m, q, r)
        for seed in range(seeds):
            rng = LCG64(seed)
            w = encode(code, [rng.below(q) for _ in range(code.dimension)])
            if seed % 4 == 0:
                targets = [index_point(rng.below(q**m), q, m)] * k
            else:
                targets = [index_point(rng.below(q**m), q, m) for _ in range(k)]
            plan = plan_batch(code, r, targets)
            check(plan.max_overlap < r, "overlap bound violated")
            reads = [p for s in plan for p in s.read_points]
            check(len(reads) == len(set(reads)) == k * (q - r), "read sets not disjoint")
            check(execute_batch(code, w, plan) == [w[t] for t in targets], f"wrong recovery (m={m}, q={q}, r={r}, seed={seed})")


def exponent_consistency(points=100, seed=11):
    rng = LCG64(seed)
    for _ in range(points):
        m = 2 + rng.below(7)
        lo, hi = (m - 2) / m, (m - 1) / m
        eps = lo + (hi - lo) * rng.below(1 << 30) / (1 << 30)
        lam = dominant_eigenvalue(build_recurrence_matrix(m))
        check(abs(redundancy_exponent(m, eps) - figure_curve(m, lam, eps)) < 1e-12, "exponent parameterisations differ")


@dataclass(frozen=True)
class Suite:
    name: str
    run: Callable[[], None]
    full_only: bool = False


SUITES = [
    Suite("field axioms, q <= 8", lambda: field_axioms([1, 2, 3])),
    Suite("binary order and Lucas", order_and_lucas),
    Suite("mod* soundness", lambda: mods_soundness([4, 8])),
    Suite("dual engines, m = 2", lambda: dual_engines([(4, 2), (8, 2)])),
    Suite("S_0(2) golden set", s0_golden),
    Suite("recurrence, m = 2, q <= 8", lambda: recurrences([(2, 1, 1, 3), (2, 2, 1, 3)])),
    Suite("eigenvalues and bounds", spectral_checks),
    Suite("good monomials = line code, m = 2, q <= 8", lambda: basis_matches_definition([(2, 4), (2, 8)])),
    Suite("X1^2 X2^2 line restrictions", x1sq_x2sq_lines),
    Suite("batch recovery, m = 2, q = 8", lambda: batches([(2, 8, 1), (2, 8, 2), (2, 8, 4)], 50)),
    Suite("exponent parameterisations", exponent_consistency),
    Suite("field axioms, q = 16", lambda: field_axioms([4]), True),
    Suite("dual engines, m = 3", lambda: dual_engines([(4, 3), (8, 3)]), True),
    Suite(
        "recurrence, m = 2 and 3, ell <= 5",
        lambda: recurrences([(2, 1, 2, 5), (2, 2, 2, 5), (3, 1, 2, 4), (3, 2, 2, 4), (3, 3, 2, 4)]),
        True,
    ),
    Suite("good monomials = line code, m = 3 and q = 16", lambda: basis_matches_definition([(3, 4), (2, 16)]), True),
    Suite(
        "batch recovery, q = 16 and m = 3",
        lambda: batches([(2, 16, 1), (2, 16, 2), (2, 16, 4), (3, 8, 1), (3, 8, 2)], 200),
        True,
    ),
]


def run_suites(level: str, out=print) -> bool:
    if level not in ("quick", "full"):
        raise ValueError("level must be quick or full")
    out(f"verify level={level} kernels={kernels.BACKEND}")
    ok_all = True
    total = time.perf_counter()
    for suite in SUITES:
        if suite.full_only and level == "quick":
            continue
        start = time.perf_counter()
        try:
            suite.run()
            status, detail = "ok", ""
        except Exception as exc:  # any exception is a failed suite
            status, detail = "FAIL", f"  ({type(exc).__name__}: {exc})"
            ok_all = False
        out(f"{status:4}  {time.perf_counter() - start:8.2f}s  {suite.name}{detail}")
    out(f"{'ok' if ok_all else 'FAIL'}  total {time.perf_counter() - total:.2f}s")
    return ok_all
