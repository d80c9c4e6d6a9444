"""The [m, d, q]-lifted Reed-Solomon code.

A codeword is the table of values of f: GF(q)^m -> GF(q) such that f restricted
to every line is a polynomial of degree < d.  The code is spanned by the
evaluations of the d*-good monomials; :func:`definitional_dimension` and
:func:`is_codeword_bruteforce` work from the line condition directly and
serve as the independent check of that basis.

Points are tuples of ints, ordered lexicographically (last coordinate
fastest); codeword values follow the same order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Optional, Sequence

import numpy as np

from . import kernels
from .finite_field import FieldSpec, UniPoly, interpolate, make_field
from .monomials import ExponentVector, dstar_bad_flags

MAX_LENGTH = 1 << 14

Point = tuple[int, ...]


def point_index(p: Sequence[int], q: int) -> int:
    idx = 0
    for c in p:
        idx = idx * q + int(c)
    return idx


def index_point(idx: int, q: int, m: int) -> Point:
    digits = []
    for _ in range(m):
        digits.append(idx % q)
        idx //= q
    return tuple(reversed(digits))


@dataclass(frozen=True)
class Line:
    """The point set {direction * t + offset : t in GF(q)}."""

    direction: Point
    offset: Point

    def __post_init__(self):
        if len(self.direction) != len(self.offset):
            raise ValueError("direction and offset differ in length")
        if not any(self.direction):
            raise ValueError("direction must be nonzero")

    @property
    def m(self) -> int:
        return len(self.direction)

    @property
    def pivot(self) -> int:
        return next(i for i, a in enumerate(self.direction) if a)

    @property
    def is_canonical(self) -> bool:
        p = self.pivot
        return self.direction[p] == 1 and self.offset[p] == 0

    def canonical(self, field: FieldSpec) -> "Line":
        p = self.pivot
        s = field.inv(self.direction[p])
        a = tuple(field.mul(s, x) for x in self.direction)
        bp = self.offset[p]
        b = tuple(y ^ field.mul(bp, x) for x, y in zip(a, self.offset))
        return Line(a, b)

    def point_at(self, field: FieldSpec, t: int) -> Point:
        return tuple(field.mul(a, t) ^ b for a, b in zip(self.direction, self.offset))

    def points(self, field: FieldSpec) -> list[Point]:
        return [self.point_at(field, t) for t in range(field.q)]

    def param_of(self, field: FieldSpec, x: Sequence[int]) -> int:
        p = self.pivot
        t = field.div(x[p] ^ self.offset[p], self.direction[p])
        if self.point_at(field, t) != tuple(x):
            raise ValueError(f"{tuple(x)} is not on {self}")
        return t


def canonical_directions(q: int, m: int) -> list[Point]:
    """Directions whose first nonzero coordinate is 1, in lexicographic order."""
    out = []
    for p in range(m):
        for tail in itertools.product(range(q), repeat=m - p - 1):
            out.append((0,) * p + (1,) + tail)
    out.sort()
    return out


def canonical_lines(field: FieldSpec, m: int) -> list[Line]:
    """Every line of GF(q)^m exactly once: by direction, then offset."""
    q = field.q
    lines = []
    for a in canonical_directions(q, m):
        p = a.index(1)
        for rest in itertools.product(range(q), repeat=m - 1):
            b = rest[:p] + (0,) + rest[p:]
            lines.append(Line(a, b))
    return lines


def lines_through(field: FieldSpec, x: Sequence[int]) -> Iterator[tuple[Line, int]]:
    """(canonical line, parameter of x) for each direction, in lexicographic order."""
    x = tuple(x)
    for a in canonical_directions(field.q, len(x)):
        p = a.index(1)
        t = x[p]
        b = tuple(xi ^ field.mul(ai, t) for ai, xi in zip(a, x))
        yield Line(a, b), t


@lru_cache(maxsize=32)
def line_table(field: FieldSpec, m: int) -> np.ndarray:
    """``table[n, t]`` = index of the point at parameter t on canonical line n."""
    q = field.q
    t = np.arange(q, dtype=np.int64)
    weights = q ** np.arange(m - 1, -1, -1, dtype=np.int64)
    rows = []
    for line in canonical_lines(field, m):
        coords = field.mul_array(t[:, None], np.array(line.direction)[None, :]) ^ np.array(line.offset)[None, :]
        rows.append(coords @ weights)
    out = np.array(rows, dtype=np.int64)
    out.setflags(write=False)
    return out


def _check_params(m: int, q: int, d: int):
    if m < 1:
        raise ValueError("m must be positive")
    if q < 2 or q & (q - 1):
        raise ValueError(f"q must be a power of two, got {q}")
    if not 1 <= d < q:
        raise ValueError(f"need 1 <= d < q, got d={d}, q={q}")
    if q**m > MAX_LENGTH:
        raise ValueError(f"code length q^m = {q**m} exceeds {MAX_LENGTH}")


@dataclass(frozen=True, eq=False)
class LiftedCodeSpec:
    m: int
    q: int
    d: int
    field: FieldSpec
    basis: tuple[tuple[int, ...], ...]

    @property
    def ell(self) -> int:
        return self.field.ell

    @property
    def r(self) -> int:
        return self.q - self.d

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def length(self) -> int:
        return self.q**self.m

    @cached_property
    def point_order(self) -> tuple[Point, ...]:
        return tuple(itertools.product(range(self.q), repeat=self.m))

    def point_index(self, p: Sequence[int]) -> int:
        return point_index(p, self.q)

    def basis_vectors(self) -> list[ExponentVector]:
        return [ExponentVector(e, self.q) for e in self.basis]

    @cached_property
    def points_array(self) -> np.ndarray:
        return np.array(self.point_order, dtype=np.int64).reshape(self.length, self.m)

    @cached_property
    def generator_matrix(self) -> np.ndarray:
        """Row k holds the evaluations of basis monomial k over point_order."""
        pw = self.field.power_table()
        E = np.array(self.basis, dtype=np.int64).reshape(self.dimension, self.m)
        P = self.points_array
        G = np.ones((self.dimension, self.length), dtype=np.int64)
        for i in range(self.m):
            G = self.field.mul_array(G, pw[P[None, :, i], E[:, None, i]])
        G.setflags(write=False)
        return G

    def __repr__(self):
        return f"LiftedCodeSpec(m={self.m}, q={self.q}, d={self.d}, dimension={self.dimension})"


@dataclass(frozen=True)
class Codeword:
    """Values of a function GF(q)^m -> GF(q) listed in point order."""

    values: tuple[int, ...]
    field: FieldSpec
    m: int

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        if len(vals) != self.field.q**self.m:
            raise ValueError(f"expected {self.field.q**self.m} values, got {len(vals)}")
        for v in vals:
            self.field.check(v)
        object.__setattr__(self, "values", vals)

    def __getitem__(self, p) -> int:
        if isinstance(p, (int, np.integer)):
            return self.values[p]
        return self.values[point_index(p, self.field.q)]

    def __len__(self):
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=np.int64)


def build_code(m: int, q: int, d: int, field: Optional[FieldSpec] = None) -> LiftedCodeSpec:
    """Lifted RS code spanned by the d*-good monomials of Z_q^m."""
    _check_params(m, q, d)
    ell = q.bit_length() - 1
    if field is None:
        field = make_field(ell)
    elif field.q != q:
        raise ValueError("field size does not match q")
    bad = dstar_bad_flags(ell, m, d)
    basis = tuple(index_point(int(n), q, m) for n in np.flatnonzero(bad == 0))
    return LiftedCodeSpec(m, q, d, field, basis)


def encode(code: LiftedCodeSpec, coeffs: Sequence[int]) -> Codeword:
    """Evaluate sum_k coeffs[k] * X^basis[k] at every point."""
    c = np.array([int(x) for x in coeffs], dtype=np.int64)
    if c.shape != (code.dimension,):
        raise ValueError(f"expected {code.dimension} coefficients, got {len(c)}")
    if code.dimension == 0 or not c.any():
        return Codeword((0,) * code.length, code.field, code.m)
    G = code.generator_matrix
    nz = np.flatnonzero(c)
    values = np.bitwise_xor.reduce(code.field.mul_array(c[nz, None], G[nz]), axis=0)
    return Codeword(tuple(values.tolist()), code.field, code.m)


def evaluate_monomial(field: FieldSpec, exponents: Sequence[int], m: int) -> Codeword:
    """Evaluations of a single monomial (any exponents in Z_q) over GF(q)^m."""
    vals = []
    for p in itertools.product(range(field.q), repeat=m):
        v = 1
        for x, e in zip(p, exponents):
            v = field.mul(v, field.pow(x, e))
        vals.append(v)
    return Codeword(tuple(vals), field, m)


def restrict_to_line(w: Codeword, line: Line) -> UniPoly:
    """Interpolate t -> w(direction*t + offset) over all of GF(q)."""
    f = w.field
    return interpolate(f, [(t, w[line.point_at(f, t)]) for t in range(f.q)])


def line_coefficients(field: FieldSpec, values) -> np.ndarray:
    """Coefficients of the degree < q interpolant of ``values`` (indexed by t).

    Works on the last axis, so a stack of lines is transformed at once.  Uses
    sum_t t^s = 1 iff (q-1) | s > 0 in characteristic two: c_k is the sum of
    g(t) t^(q-1-k) for 1 <= k <= q-1, and c_0 = g(0).
    """
    q = field.q
    V = np.asarray(values, dtype=np.int64)
    pw = field.power_table()
    k = np.arange(1, q)
    P = pw[:, q - 1 - k]  # P[t, k-1] = t^(q-1-k)
    terms = field.mul_array(V[..., :, None], P)
    high = np.bitwise_xor.reduce(terms, axis=-2)
    return np.concatenate([V[..., :1], high], axis=-1)


def is_codeword_bruteforce(w, m: int, q: int, d: int, field: Optional[FieldSpec] = None) -> bool:
    """Every line restriction of ``w`` has degree < d."""
    _check_params(m, q, d)
    if field is None:
        field = make_field(q.bit_length() - 1)
    vals = w.as_array() if isinstance(w, Codeword) else np.asarray(w, dtype=np.int64)
    if vals.shape != (q**m,):
        raise ValueError(f"expected {q**m} values")
    table = line_table(field, m)
    for start in range(0, len(table), 4096):
        coeffs = line_coefficients(field, vals[table[start : start + 4096]])
        if coeffs[:, d:].any():
            return False
    return True


def line_constraint_matrix(m: int, q: int, d: int, field: Optional[FieldSpec] = None) -> np.ndarray:
    """Rows: for each canonical line and each k in [d, q-1], c_k(w|_L) = 0."""
    _check_params(m, q, d)
    if field is None:
        field = make_field(q.bit_length() - 1)
    table = line_table(field, m)
    pw = field.power_table()
    n_lines = len(table)
    blocks = []
    for k in range(d, q):
        block = np.zeros((n_lines, q**m), dtype=np.int64)
        block[np.arange(n_lines)[:, None], table] = pw[np.arange(q), q - 1 - k][None, :]
        blocks.append(block)
    return np.concatenate(blocks, axis=0)


def definitional_dimension(m: int, q: int, d: int, field: Optional[FieldSpec] = None) -> int:
    """Dimension of {w : every line restriction has degree < d} (null space size)."""
    if field is None:
        field = make_field(q.bit_length() - 1)
    rank, _ = kernels.rref_pivots(line_constraint_matrix(m, q, d, field), field)
    return q**m - rank


def information_set(code: LiftedCodeSpec) -> list[Point]:
    """Greedy (point-order) set of ``dimension`` independent coordinates."""
    if code.dimension == 0:
        return []
    rank, pivots = kernels.rref_pivots(code.generator_matrix, code.field)
    if rank != code.dimension:
        raise RuntimeError(f"generator matrix has rank {rank} < dimension {code.dimension}")
    return [code.point_order[c] for c in pivots]


def solve(field: FieldSpec, A, b) -> np.ndarray:
    """Solve the square system A x = b over ``field`` by Gauss-Jordan."""
    A = np.array(A, dtype=np.int64)
    b = np.array(b, dtype=np.int64)
    n = A.shape[0]
    if A.shape != (n, n) or b.shape != (n,):
        raise ValueError("need a square system")
    M = np.concatenate([A, b[:, None]], axis=1)
    for col in range(n):
        nz = np.flatnonzero(M[col:, col])
        if nz.size == 0:
            raise np.linalg.LinAlgError("singular system")
        p = col + int(nz[0])
        M[[col, p]] = M[[p, col]]
        M[col] = field.mul_array(M[col], field.inv(int(M[col, col])))
        others = np.flatnonzero(M[:, col])
        others = others[others != col]
        if others.size:
            M[others] ^= field.mul_array(M[others, col][:, None], M[col][None, :])
    return M[:, n]


def systematic_encode(code: LiftedCodeSpec, message: Sequence[int], info: Optional[Sequence[Point]] = None) -> Codeword:
    """Codeword whose values on the information set equal ``message``."""
    if info is None:
        info = information_set(code)
    if len(message) != code.dimension:
        raise ValueError(f"expected {code.dimension} message symbols")
    cols = [code.point_index(p) for p in info]
    coeffs = solve(code.field, code.generator_matrix[:, cols].T, message)
    return encode(code, coeffs)


# -- text formats ---------------------------------------------------------------

HEADER = "lifted-rs v1"


def dump_code(code: LiftedCodeSpec) -> str:
    lines = [f"{HEADER} m={code.m} ell={code.ell} d={code.d} modulus={code.field.modulus:#x}"]
    lines += [",".join(str(e) for e in vec) for vec in code.basis]
    return "\n".join(lines) + "\n"


def load_code(text: str) -> LiftedCodeSpec:
    rows = [ln.strip() for ln in text.strip().splitlines()]
    if not rows or not rows[0].startswith(HEADER + " "):
        raise ValueError("missing lifted-rs v1 header")
    fields = dict(tok.split("=", 1) for tok in rows[0][len(HEADER) + 1 :].split())
    if set(fields) != {"m", "ell", "d", "modulus"}:
        raise ValueError(f"unexpected header fields {sorted(fields)}")
    m, ell, d = int(fields["m"]), int(fields["ell"]), int(fields["d"])
    field = FieldSpec(ell, int(fields["modulus"], 16))
    code = build_code(m, 1 << ell, d, field)
    basis = tuple(tuple(int(x) for x in row.split(",")) for row in rows[1:] if row)
    if basis != code.basis:
        raise ValueError("basis listed in file is not the d*-good monomial set")
    return code


def dump_codeword(w: Codeword) -> str:
    return " ".join(f"{v:x}" for v in w.values) + "\n"


def load_codeword(text: str, code: LiftedCodeSpec) -> Codeword:
    return Codeword(tuple(int(tok, 16) for tok in text.split()), code.field, code.m)
