"""Hot kernels with a compiled core and a numpy fallback.

The compiled extension ``_ckernels`` is used when importable.  Set the
environment variable ``LIFTRS_KERNELS`` to ``python`` to force the fallback or
to ``compiled`` to make a missing extension an import error.
"""

from __future__ import annotations

import os

from . import _pure

_mode = os.environ.get("LIFTRS_KERNELS", "auto").lower()
if _mode not in {"auto", "python", "compiled"}:
    raise ImportError(f"LIFTRS_KERNELS must be auto, python or compiled, not {_mode!r}")

try:
    from . import _ckernels
except ImportError:
    if _mode == "compiled":
        raise
    _ckernels = None

if _mode == "python" or _ckernels is None:
    _impl = _pure
    BACKEND = "python"
else:
    _impl = _ckernels
    BACKEND = "compiled"


def available_backends() -> dict:
    """Name -> kernel module for every importable backend."""
    out = {"python": _pure}
    if _ckernels is not None:
        out["compiled"] = _ckernels
    return out


def reachable_exact(profile, ell, target):
    return _impl.reachable_exact(profile, ell, target)


def sj_flags(ell, m, r):
    return _impl.sj_flags(ell, m, r)


def dstar_bad_flags(ell, m, deg_bound):
    return _impl.dstar_bad_flags(ell, m, deg_bound)


def rref_pivots(matrix, field):
    """(rank, pivot columns) of an integer matrix over ``field``."""
    return _impl.rref_pivots(matrix, field.exp_array, field.log_array, field.q)
