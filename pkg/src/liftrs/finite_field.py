"""Arithmetic in binary extension fields GF(2^ell), 1 <= ell <= 16.

Elements are integers in ``[0, q)`` whose bits are polynomial coefficients
over GF(2).  Addition is XOR.  Multiplication is the carry-less product
reduced modulo the field's irreducible polynomial; for speed the field keeps
log/antilog tables built from that product, so every result is bit-identical
to the schoolbook reduction.

Hot paths work on plain ints with an explicit :class:`FieldSpec`.
:class:`FieldElement` wraps an int together with its field for operator-style
use and refuses to mix fields.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence, Union

import numpy as np

MAX_ELL = 16

# degree returned for the zero polynomial; compares below every integer
ZERO_DEGREE = -math.inf


def clmul(a: int, b: int) -> int:
    """Carry-less (GF(2)[x]) product of two bit-vectors."""
    result = 0
    while b:
        if b & 1:
            result ^= a
        a <<= 1
        b >>= 1
    return result


def poly_mod(a: int, modulus: int) -> int:
    """Remainder of ``a`` modulo ``modulus`` in GF(2)[x]."""
    mdeg = modulus.bit_length() - 1
    while a.bit_length() - 1 >= mdeg:
        a ^= modulus << (a.bit_length() - 1 - mdeg)
    return a


def is_irreducible(poly: int) -> bool:
    """Trial division by every polynomial of degree 1..deg/2."""
    deg = poly.bit_length() - 1
    if deg < 1:
        return False
    for divisor in range(2, 1 << (deg // 2 + 1)):
        if poly_mod(poly, divisor) == 0:
            return False
    return True


def smallest_irreducible(ell: int) -> int:
    """Smallest degree-``ell`` irreducible with nonzero constant term."""
    for poly in range((1 << ell) | 1, 1 << (ell + 1), 2):
        if is_irreducible(poly):
            return poly
    raise AssertionError(f"no irreducible polynomial of degree {ell}")


@dataclass(frozen=True)
class FieldSpec:
    """The field GF(2^ell) defined by ``modulus`` (bit ``ell`` set).

    The modulus is validated for degree and irreducibility on construction.
    """

    ell: int
    modulus: int

    def __post_init__(self):
        if not 1 <= self.ell <= MAX_ELL:
            raise ValueError(f"ell must be in 1..{MAX_ELL}, got {self.ell}")
        if self.modulus.bit_length() - 1 != self.ell:
            raise ValueError(f"modulus {self.modulus:#x} does not have degree {self.ell}")
        if not is_irreducible(self.modulus):
            raise ValueError(f"modulus {self.modulus:#x} is reducible over GF(2)")

    @property
    def q(self) -> int:
        return 1 << self.ell

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(self, value)

    def __repr__(self):
        return f"FieldSpec(ell={self.ell}, modulus={self.modulus:#x})"

    # -- tables -------------------------------------------------------------

    @cached_property
    def _tables(self):
        q = self.q
        order = q - 1
        # first element whose powers exhaust the multiplicative group
        for g in range(1, q):
            exp = [1] * order
            x = 1
            seen = {1}
            ok = True
            for k in range(1, order):
                x = poly_mod(clmul(x, g), self.modulus)
                if x in seen:
                    ok = False
                    break
                seen.add(x)
                exp[k] = x
            if ok:
                break
        else:  # pragma: no cover - impossible for an irreducible modulus
            raise AssertionError("multiplicative group has no generator")
        log = [0] * q
        for k, x in enumerate(exp):
            log[x] = k
        return exp, log

    @property
    def exp_table(self) -> list[int]:
        return self._tables[0]

    @property
    def log_table(self) -> list[int]:
        return self._tables[1]

    @cached_property
    def exp_array(self) -> np.ndarray:
        # doubled so that log(a) + log(b) indexes without a modulo
        exp = np.array(self.exp_table, dtype=np.int64)
        return np.concatenate([exp, exp])

    @cached_property
    def log_array(self) -> np.ndarray:
        return np.array(self.log_table, dtype=np.int64)

    # -- scalar arithmetic on ints -----------------------------------------

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of GF({self.q})")
        return a

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        log = self.log_table
        return self.exp_table[(log[a] + log[b]) % (self.q - 1)]

    def mul_reference(self, a: int, b: int) -> int:
        """Schoolbook carry-less multiply and reduce (no tables)."""
        return poly_mod(clmul(a, b), self.modulus)

    def pow(self, a: int, e: int) -> int:
        """``a**e`` with the convention ``0**0 == 1``."""
        if e < 0:
            return self.pow(self.inv(a), -e)
        if e == 0:
            return 1
        if a == 0:
            return 0
        return self.exp_table[(self.log_table[a] * e) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        # a^(q-2) by square-and-multiply
        result, base, e = 1, a, self.q - 2
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    # -- vectorised arithmetic ---------------------------------------------

    def mul_array(self, a, b) -> np.ndarray:
        """Elementwise product of broadcastable integer arrays."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        log = self.log_array
        out = self.exp_array[log[a] + log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def power_table(self) -> np.ndarray:
        """``table[x, e] = x**e`` for x, e in [0, q), with ``0**0 == 1``."""
        q = self.q
        x = np.arange(q, dtype=np.int64)[:, None]
        e = np.arange(q, dtype=np.int64)[None, :]
        out = self.exp_array[(self.log_array[x] * e) % (q - 1)]
        out = np.where(x == 0, 0, out)
        out[0, 0] = 1
        return out


@lru_cache(maxsize=None)
def make_field(ell: int) -> FieldSpec:
    """GF(2^ell) with the lexicographically smallest irreducible modulus."""
    if not 1 <= ell <= MAX_ELL:
        raise ValueError(f"ell must be in 1..{MAX_ELL}, got {ell}")
    return FieldSpec(ell, smallest_irreducible(ell))


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    value: int

    def __post_init__(self):
        self.field.check(self.value)

    def _same(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError(f"cannot mix elements of {self.field} and {other.field}")
            return other.value
        return NotImplemented

    def __add__(self, other):
        v = self._same(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.field, self.value ^ v)

    __sub__ = __add__

    def __mul__(self, other):
        v = self._same(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.field, self.field.mul(self.value, v))

    def __truediv__(self, other):
        v = self._same(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.field, self.field.div(self.value, v))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def __neg__(self):
        return self

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __repr__(self):
        return f"GF({self.field.q})({self.value})"


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


Scalar = Union[int, FieldElement]


@dataclass(frozen=True)
class UniPoly:
    """Univariate polynomial over ``field``; ``coeffs[k]`` multiplies T^k.

    Trailing zero coefficients are stripped, so the zero polynomial has
    ``coeffs == ()`` and degree :data:`ZERO_DEGREE`.
    """

    field: FieldSpec
    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        for c in coeffs:
            self.field.check(c)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if len(coeffs) > self.field.q:
            raise ValueError("polynomial has more than q coefficients")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def __call__(self, x: int) -> int:
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.mul(acc, x) ^ c
        return acc


def eval_poly(p: UniPoly, x: Scalar) -> Scalar:
    """Horner evaluation; returns a FieldElement when given one."""
    if isinstance(x, FieldElement):
        if x.field != p.field:
            raise ValueError("point and polynomial live in different fields")
        return FieldElement(p.field, p(x.value))
    return p(p.field.check(x))


def interpolate(field: FieldSpec, points: Iterable[tuple[Scalar, Scalar]]) -> UniPoly:
    """Unique polynomial of degree < len(points) through ``points``.

    Newton divided differences, expanded to monomial coefficients.
    """
    xs: list[int] = []
    ys: list[int] = []
    for x, y in points:
        xs.append(field.check(int(x)))
        ys.append(field.check(int(y)))
    n = len(xs)
    if not 1 <= n <= field.q:
        raise ValueError(f"need between 1 and {field.q} points, got {n}")
    if len(set(xs)) != n:
        raise ValueError("interpolation nodes must be distinct")
    mul_, inv_ = field.mul, field.inv

    # divided differences in place; subtraction is XOR
    dd = list(ys)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = mul_(dd[i] ^ dd[i - 1], inv_(xs[i] ^ xs[i - level]))

    # Horner on the Newton form: p = dd[0] + (T - x0)(dd[1] + (T - x1)(...))
    coeffs = [0] * n
    coeffs[0] = dd[n - 1]
    length = 1
    for i in range(n - 2, -1, -1):
        # coeffs <- coeffs * (T + xs[i]) + dd[i]
        xi = xs[i]
        new = [0] * (length + 1)
        for k in range(length):
            new[k + 1] ^= coeffs[k]
            new[k] ^= mul_(coeffs[k], xi)
        new[0] ^= dd[i]
        coeffs[: length + 1] = new
        length += 1
    return UniPoly(field, tuple(coeffs[:n]))


def evaluate_all(p: UniPoly, xs: Sequence[int]) -> list[int]:
    return [p(x) for x in xs]
