"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Each row reports the best of ``--repeat`` runs per backend and checks that
both backends return identical results.
"""

import argparse
import time

import numpy as np

from liftrs import kernels
from liftrs.finite_field import make_field
from liftrs.lifted_code import line_constraint_matrix


def cases():
    yield "sj_flags ell=6 m=3 r=2", lambda k: k.sj_flags(6, 3, 2)
    yield "sj_flags ell=3 m=6 r=3", lambda k: k.sj_flags(3, 6, 3)
    yield "sj_flags ell=4 m=5 r=4", lambda k: k.sj_flags(4, 5, 4)
    yield "dstar_bad_flags ell=4 m=4 bound=9", lambda k: k.dstar_bad_flags(4, 4, 9)
    F = make_field(3)
    A = line_constraint_matrix(3, 8, 5)
    yield f"rref_pivots {A.shape[0]}x{A.shape[1]} over GF(8)", lambda k: k.rref_pivots(A, F.exp_array, F.log_array, F.q)


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def same(a, b):
    if isinstance(a, tuple):
        return a[0] == b[0] and list(a[1]) == list(b[1])
    return np.array_equal(np.asarray(a), np.asarray(b))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = kernels.available_backends()
    if "compiled" not in backends:
        print("compiled extension not built; only the fallback is timed")
    names = sorted(backends)
    print(f"{'kernel':42}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for label, fn in cases():
        res = {n: best_of(lambda: fn(backends[n]), args.repeat) for n in names}
        if len(names) > 1 and not same(res["compiled"][1], res["python"][1]):
            raise SystemExit(f"backends disagree on {label}")
        row = f"{label:42}" + "".join(f"{res[n][0]:11.4f}s" for n in names)
        if len(names) > 1:
            row += f"{res['python'][0] / res['compiled'][0]:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
