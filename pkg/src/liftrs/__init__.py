"""Lifted Reed-Solomon codes over GF(2^ell) and their batch-code use.

Submodules:

    finite_field   GF(2^ell) arithmetic and univariate polynomials
    monomials      good/bad monomial classification and S_j counts
    spectral       the count recurrence, its eigenvalue, redundancy exponents
    lifted_code    code construction, encoding, line restrictions
    batch          disjoint recovering sets for k-batch requests
    kernels        compiled core with a numpy fallback
"""

from .finite_field import FieldSpec, make_field
from .lifted_code import LiftedCodeSpec, build_code, encode
from .batch import plan_batch, execute_batch, capacity
from .spectral import build_recurrence_matrix, dominant_eigenvalue

__all__ = [
    "FieldSpec",
    "make_field",
    "LiftedCodeSpec",
    "build_code",
    "encode",
    "plan_batch",
    "execute_batch",
    "capacity",
    "build_recurrence_matrix",
    "dominant_eigenvalue",
]

__version__ = "0.1.0"
