"""Command-line front end.

    liftrs lambda-table [--m 9] [--out table.csv]
    liftrs count --m 2 --ell 2 --r 1 [--oracle]
    liftrs figure-data --out curves.csv
    liftrs batch-demo --m 2 --ell 4 --r 2 [--k 2] [--seed 7] [--out plan.txt]
    liftrs build-code --m 2 --ell 2 --d 3 [--out code.txt]
    liftrs verify --level quick|full

Exit status: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass

from . import verify as verify_mod
from .batch import CapacityError, capacity, dump_plan, execute_batch, plan_batch
from .lifted_code import build_code, dump_code, encode, index_point
from .monomials import MAX_ENUMERATION, enumerate_sj, enumerate_sj_oracle
from .rng import LCG64
from .spectral import (
    build_recurrence_matrix,
    dominant_eigenvalue,
    figure_curve,
    g_exponent,
    linear_exponent,
    log3_exponent,
    propagate_counts,
    spectral_report,
)


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CurvePoint:
    eps: float
    exponent: float
    series: str


def _write(path, text):
    try:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


# -- lambda-table ------------------------------------------------------------


def lambda_rows(m_max):
    if not 2 <= m_max <= 12:
        raise UsageError("--m must be in 2..12 for lambda-table")
    return [spectral_report(m) for m in range(2, m_max + 1)]


def cmd_lambda_table(args):
    rows = lambda_rows(9 if args.m is None else args.m)
    print(f"{'m':>2}  {'lambda_m':>12}  {'m-log2(lambda_m)':>16}  {'p_m':>10}")
    for r in rows:
        print(f"{r.m:>2}  {r.lambda_:>12.4f}  {r.gap_exponent:>16.4e}  {r.pm:>10.4e}")
    if args.out:
        lines = ["m,lambda,gap,p_m"] + [f"{r.m},{r.lambda_!r},{r.gap_exponent!r},{r.pm!r}" for r in rows]
        _write(args.out, "\n".join(lines) + "\n")
    return 0


# -- count -------------------------------------------------------------------


def count_vector(m, ell, r, oracle=False):
    """(s, base_ell); base_ell is None for pure enumeration."""
    if not 2 <= m <= 12 or not 1 <= ell <= 16:
        raise UsageError("need 2 <= m <= 12 and 1 <= ell <= 16")
    if not 1 <= r <= min(m, 2**ell):
        raise UsageError(f"need 1 <= r <= min(m, q) = {min(m, 2 ** ell)}")
    if oracle:
        if 2 ** (ell * m) > MAX_ENUMERATION:
            raise UsageError(f"q^m = 2^{ell * m} is beyond enumeration scale")
        return enumerate_sj_oracle(ell, m, r).s, None
    base = max(1, math.ceil(math.log2(r)))
    if 2 ** (base * m) > MAX_ENUMERATION:
        raise UsageError(f"base enumeration 2^{base * m} is beyond enumeration scale")
    return propagate_counts(m, enumerate_sj(base, m, r).s, ell - base), base


def cmd_count(args):
    _need(args, "m", "ell", "r")
    s, base = count_vector(args.m, args.ell, args.r, args.oracle)
    method = "enumeration" if base is None else f"recurrence from ell={base}"
    print(f"m={args.m} ell={args.ell} r={args.r} method={method}")
    for j, v in enumerate(s):
        print(f"s_{j} {v}")
    return 0


# -- figure-data ---------------------------------------------------------------


def eps_grid(lo, hi, step=0.001):
    """Both endpoints plus every multiple of ``step`` strictly between them."""
    n_lo, n_hi = math.floor(lo / step + 1e-9) + 1, math.ceil(hi / step - 1e-9) - 1
    return [lo] + [i * step for i in range(n_lo, n_hi + 1)] + [hi]


def figure_points():
    pts = []
    for m in (2, 3, 4):
        lam = dominant_eigenvalue(build_recurrence_matrix(m))
        for x in eps_grid((m - 2) / m, (m - 1) / m):
            pts.append(CurvePoint(x, figure_curve(m, lam, x), f"m={m}"))
    for x in eps_grid(0.0, 0.269):
        pts.append(CurvePoint(x, linear_exponent(x), "(3eps+1)/2"))
    for x in eps_grid(0.269, 0.476):
        pts.append(CurvePoint(x, log3_exponent(x), "log4(3)+(2-log2(3))eps"))
    for x in eps_grid(0.0, 0.999):
        pts.append(CurvePoint(x, g_exponent(x)[0], "g(eps)"))
    return pts


def cmd_figure_data(args):
    _need(args, "out")
    rows = [f"{p.series},{p.eps!r},{p.exponent!r}" for p in figure_points()]
    _write(args.out, "series,eps,exponent\n" + "\n".join(rows) + "\n")
    print(f"wrote {len(rows)} points to {args.out}")
    return 0


# -- batch-demo ------------------------------------------------------------------


def batch_demo(m, ell, r, k=None, seed=0, out=print):
    """Run one seeded batch end to end; returns (passed, plan)."""
    if not 2 <= m <= 4 or not 1 <= ell <= 8:
        raise UsageError("batch-demo needs 2 <= m <= 4 and 1 <= ell <= 8")
    q = 2**ell
    if not 1 <= r < q:
        raise UsageError(f"need 1 <= r < q = {q}")
    cap = capacity(m, q, r)
    k = cap if k is None else k
    if k < 1:
        raise UsageError("--k must be positive")
    if k > cap:
        raise UsageError(f"k={k} exceeds the batch capacity r*q^(m-2) = {cap}")
    try:
        code = build_code(m, q, q - r)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rng = LCG64(seed)
    w = encode(code, [rng.below(q) for _ in range(code.dimension)])
    targets = [index_point(rng.below(q**m), q, m) for _ in range(k)]
    try:
        plan = plan_batch(code, r, targets)
    except CapacityError as exc:
        raise UsageError(str(exc)) from None
    got = execute_batch(code, w, plan)

    out(f"batch-demo m={m} ell={ell} r={r} k={k} seed={seed}")
    out(f"code length={code.length} dimension={code.dimension} d={code.d} capacity={cap}")
    passed = True
    for i, (s, v) in enumerate(zip(plan, got)):
        want = w[s.target]
        passed &= v == want
        out(
            f"set {i}: target={s.target} dir={s.line.direction} offset={s.line.offset} "
            f"reads={list(s.read_params)} overlap={s.overlap} recovered={v} expected={want}"
        )
    out(f"max overlap {plan.max_overlap} (must be < r={r})")
    passed &= plan.max_overlap < r
    out("PASS" if passed else "FAIL")
    return passed, plan


def cmd_batch_demo(args):
    _need(args, "m", "ell", "r")
    passed, plan = batch_demo(args.m, args.ell, args.r, args.k, 0 if args.seed is None else args.seed)
    if args.out:
        _write(args.out, dump_plan(plan))
    return 0 if passed else 1


# -- build-code --------------------------------------------------------------------


def cmd_build_code(args):
    _need(args, "m", "ell", "d")
    try:
        code = build_code(args.m, 2**args.ell, args.d)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = dump_code(code)
    if args.out:
        _write(args.out, text)
        print(f"[{args.m},{args.d},{code.q}] lifted RS code: length {code.length}, dimension {code.dimension}")
    else:
        sys.stdout.write(text)
    return 0


# -- verify --------------------------------------------------------------------------


def cmd_verify(args):
    return 0 if verify_mod.run_suites(args.level) else 1


# -- plumbing --------------------------------------------------------------------------


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} requires {' '.join(missing)}")


def build_parser():
    p = argparse.ArgumentParser(prog="liftrs", description="Lifted Reed-Solomon batch codes over GF(2^ell).")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, handler, help, flags):
        sp = sub.add_parser(name, help=help)
        for flag in flags:
            if flag == "oracle":
                sp.add_argument("--oracle", action="store_true", help="count by enumeration only")
            elif flag == "out":
                sp.add_argument("--out", help="output path")
            elif flag == "level":
                sp.add_argument("--level", choices=["quick", "full"], default="quick")
            else:
                sp.add_argument(f"--{flag}", type=int)
        sp.set_defaults(handler=handler)

    add("lambda-table", cmd_lambda_table, "eigenvalue table for m = 2..M", ["m", "out"])
    add("count", cmd_count, "exact S_j counts", ["m", "ell", "r", "oracle"])
    add("figure-data", cmd_figure_data, "redundancy exponent curves as CSV", ["out"])
    add("batch-demo", cmd_batch_demo, "plan and serve one seeded batch", ["m", "ell", "r", "k", "seed", "out"])
    add("build-code", cmd_build_code, "write a code in the text format", ["m", "ell", "d", "out"])
    add("verify", cmd_verify, "run the self-check suites", ["level"])
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"liftrs {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
