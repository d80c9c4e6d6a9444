"""Both kernel backends agree with each other and with a direct oracle."""

import itertools

import numpy as np
import pytest

from liftrs import kernels
from liftrs.finite_field import make_field
from liftrs.monomials import submasks

BACKENDS = kernels.available_backends()


def oracle_reachable(d, target):
    return any(sum(i) == target for i in itertools.product(*(submasks(c) for c in d)))


def profile_of(d, ell):
    return [sum((c >> b) & 1 for c in d) for b in range(ell)]


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_reachable_matches_oracle(name):
    k = BACKENDS[name]
    ell, m = 3, 3
    for d in itertools.product(range(8), repeat=m):
        prof = np.array(profile_of(d, ell), dtype=np.int32)
        for t in range(0, m * 7 + 2):
            assert bool(k.reachable_exact(prof, ell, t)) == oracle_reachable(d, t), (d, t)


@pytest.mark.parametrize("ell,m,r", [(1, 2, 1), (2, 2, 1), (2, 2, 2), (2, 3, 3), (3, 3, 2), (4, 2, 2), (2, 4, 3)])
def test_sj_flags_backends_agree(ell, m, r):
    outs = [np.asarray(k.sj_flags(ell, m, r)) for k in BACKENDS.values()]
    q = 1 << ell
    want = []
    for d in itertools.product(range(q), repeat=m):
        sums = {sum(i) for i in itertools.product(*(submasks(c) for c in d))}
        want.append(sum(1 << j for j in range(m) if q - r + j * q in sums))
    for out in outs:
        assert out.tolist() == want


@pytest.mark.parametrize("ell,m", [(2, 2), (3, 2), (2, 3)])
def test_dstar_flags_backends_agree(ell, m):
    q = 1 << ell
    for bound in range(1, q):
        outs = [np.asarray(k.dstar_bad_flags(ell, m, bound)).tolist() for k in BACKENDS.values()]
        assert all(o == outs[0] for o in outs)
        targets = {t for t in range(1, m * (q - 1) + 1) if (t - 1) % (q - 1) + 1 >= bound}
        want = [int(any(sum(i) in targets for i in itertools.product(*(submasks(c) for c in d))))
                for d in itertools.product(range(q), repeat=m)]
        assert outs[0] == want


def _rank_oracle(M, F):
    """Gaussian elimination on Python ints."""
    M = [list(map(int, row)) for row in M]
    rank, pivots = 0, []
    for c in range(len(M[0]) if M else 0):
        p = next((i for i in range(rank, len(M)) if M[i][c]), None)
        if p is None:
            continue
        M[rank], M[p] = M[p], M[rank]
        s = F.inv(M[rank][c])
        M[rank] = [F.mul(s, x) for x in M[rank]]
        for i in range(len(M)):
            if i != rank and M[i][c]:
                f = M[i][c]
                M[i] = [x ^ F.mul(f, y) for x, y in zip(M[i], M[rank])]
        pivots.append(c)
        rank += 1
    return rank, pivots


@pytest.mark.parametrize("ell", [1, 2, 4])
def test_rref_backends_agree(ell):
    F = make_field(ell)
    rng = np.random.default_rng(ell)
    for shape in [(3, 5), (6, 4), (8, 8), (1, 7)]:
        M = rng.integers(0, F.q, size=shape)
        M[1 % shape[0]] = 0  # force some rank deficiency
        want = _rank_oracle(M, F)
        for k in BACKENDS.values():
            rank, piv = k.rref_pivots(M.astype(np.int64), F.exp_array, F.log_array, F.q)
            assert (rank, list(piv)) == want


def test_backend_reported():
    assert kernels.BACKEND in BACKENDS
