import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from liftrs.finite_field import make_field
from liftrs.lifted_code import (
    Codeword,
    Line,
    build_code,
    canonical_lines,
    definitional_dimension,
    dump_code,
    dump_codeword,
    encode,
    evaluate_monomial,
    index_point,
    information_set,
    is_codeword_bruteforce,
    line_coefficients,
    line_table,
    lines_through,
    load_code,
    load_codeword,
    point_index,
    restrict_to_line,
    solve,
    systematic_encode,
)
from liftrs.monomials import all_vectors, is_dstar_bad


def test_univariate_code_is_rs():
    code = build_code(1, 8, 5)
    assert code.dimension == 5
    assert code.basis == ((0,), (1,), (2,), (3,), (4,))


def test_example_code():
    code = build_code(2, 4, 3)
    assert (2, 2) in code.basis
    bad = sum(1 for d in all_vectors(2, 2) if is_dstar_bad(d, 3, 4))
    assert code.dimension == 16 - bad == 7
    assert definitional_dimension(2, 4, 3) == 7


def test_point_indexing_roundtrip():
    for idx in range(64):
        assert point_index(index_point(idx, 4, 3), 4) == idx
    code = build_code(2, 4, 2)
    assert code.point_order[5] == (1, 1)


@pytest.mark.parametrize("q,m", [(4, 2), (2, 3), (4, 3)])
def test_line_enumeration(q, m):
    F = make_field(q.bit_length() - 1)
    lines = canonical_lines(F, m)
    assert len(lines) == q ** (m - 1) * (q**m - 1) // (q - 1)
    assert all(L.is_canonical for L in lines)
    assert len({frozenset(L.points(F)) for L in lines}) == len(lines)
    table = line_table(F, m)
    assert table.shape == (len(lines), q)
    x = (1,) * m
    through = list(lines_through(F, x))
    assert len(through) == (q**m - 1) // (q - 1)
    others = [p for L, t in through for p in L.points(F) if p != x]
    assert len(others) == len(set(others)) == q**m - 1
    for L, t in through:
        assert L.point_at(F, t) == x and L.param_of(F, x) == t


def test_line_canonical_form():
    F = make_field(2)
    L = Line((2, 3), (1, 1))
    C = L.canonical(F)
    assert C.is_canonical and set(C.points(F)) == set(L.points(F))
    with pytest.raises(ValueError):
        Line((0, 0), (1, 1))


def test_zero_and_monomial_encoding():
    code = build_code(2, 4, 3)
    assert set(encode(code, [0] * code.dimension).values) == {0}
    w = encode(code, [int(e == (2, 2)) for e in code.basis])
    F = code.field
    for x1, x2 in itertools.product(range(4), repeat=2):
        assert w[(x1, x2)] == F.mul(F.pow(x1, 2), F.pow(x2, 2))
    assert w.values == evaluate_monomial(F, (2, 2), 2).values


def test_constant_restricts_to_constant():
    code = build_code(2, 8, 3)
    w = encode(code, [5 if e == (0, 0) else 0 for e in code.basis])
    F = code.field
    for L in canonical_lines(F, 2)[::7]:
        assert restrict_to_line(w, L).coeffs == (5,)


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_random_codeword_restrictions(data):
    code = build_code(2, 8, 3)
    coeffs = data.draw(st.lists(st.integers(0, 7), min_size=code.dimension, max_size=code.dimension))
    w = encode(code, coeffs)
    F = code.field
    L = data.draw(st.sampled_from(canonical_lines(F, 2)))
    assert restrict_to_line(w, L).degree < 3


def test_line_coefficients_match_interpolation():
    F = make_field(3)
    rng = np.random.default_rng(0)
    vals = rng.integers(0, 8, size=(10, 8))
    got = line_coefficients(F, vals)
    from liftrs.finite_field import interpolate
    for row, c in zip(vals, got):
        p = interpolate(F, list(enumerate(int(v) for v in row)))
        assert c.tolist() == list(p.coeffs) + [0] * (8 - len(p.coeffs))


def test_bruteforce_examples():
    F = make_field(2)
    assert not is_codeword_bruteforce(evaluate_monomial(F, (3, 3), 2), 2, 4, 3)
    assert is_codeword_bruteforce(Codeword((0,) * 16, F, 2), 2, 4, 3)
    assert is_codeword_bruteforce(evaluate_monomial(F, (2, 2), 2), 2, 4, 3)


def test_basis_matches_definition_q16():
    for d in (3, 9, 15):
        assert definitional_dimension(2, 16, d) == build_code(2, 16, d).dimension


def test_information_set_and_systematic_encoding():
    code = build_code(1, 4, 2)
    assert information_set(code) == [(0,), (1,)]
    code = build_code(2, 4, 3)
    info = information_set(code)
    assert len(info) == code.dimension
    msg = [3, 1, 0, 2, 2, 1, 3]
    w = systematic_encode(code, msg, info)
    assert [w[p] for p in info] == msg
    assert is_codeword_bruteforce(w, 2, 4, 3)


def test_solve():
    F = make_field(2)
    A = np.array([[1, 2], [2, 1]])  # det = 1 + 2*2 = 2
    x = solve(F, A, [1, 0])
    assert [F.mul(1, int(x[0])) ^ F.mul(2, int(x[1])), F.mul(2, int(x[0])) ^ F.mul(1, int(x[1]))] == [1, 0]
    with pytest.raises(np.linalg.LinAlgError):
        solve(F, np.array([[1, 2], [3, 1]]), [1, 0])  # det = 1 + 2*3 = 0


def test_text_formats():
    code = build_code(2, 8, 5)
    text = dump_code(code)
    assert text.startswith("lifted-rs v1 m=2 ell=3 d=5 modulus=0xb")
    back = load_code(text)
    assert back.basis == code.basis and back.field == code.field
    w = encode(code, [i % 8 for i in range(code.dimension)])
    assert load_codeword(dump_codeword(w), code).values == w.values
    with pytest.raises(ValueError):
        load_code(text.replace("d=5", "d=4"))
    with pytest.raises(ValueError):
        load_code("garbage\n")


def test_parameter_validation():
    with pytest.raises(ValueError):
        build_code(2, 6, 3)
    with pytest.raises(ValueError):
        build_code(2, 4, 4)
    with pytest.raises(ValueError):
        build_code(8, 8, 3)  # 2^24 points exceeds the length cap
