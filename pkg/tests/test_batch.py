import pytest
from hypothesis import given, settings, strategies as st

from liftrs.batch import (
    BatchRequest,
    CapacityError,
    binary_expand,
    capacity,
    check_plan,
    dump_plan,
    execute_batch,
    load_plan,
    plan_batch,
    recover_bit,
    symbols_to_bits,
)
from liftrs.lifted_code import build_code, encode, index_point
from liftrs.rng import LCG64


def test_capacity_examples():
    assert capacity(2, 16, 2) == 2
    assert capacity(3, 8, 2) == 16
    assert capacity(4, 4, 1) == 16
    with pytest.raises(ValueError):
        capacity(2, 16, 16)


def test_single_target_uses_first_line():
    code = build_code(2, 8, 6)
    plan = plan_batch(code, 2, [(3, 5)])
    (s,) = plan.sets
    assert s.line.direction == (0, 1) and s.overlap == 0
    assert len(s.read_points) == 6 and (3, 5) not in s.read_points


def test_identical_targets_get_disjoint_lines():
    code = build_code(2, 16, 14)
    plan = plan_batch(code, 2, BatchRequest(((4, 9), (4, 9))))
    a, b = plan.sets
    assert a.line != b.line
    assert not set(a.read_points) & set(b.read_points)
    check_plan(code, plan)


def test_random_targets_with_repeats():
    code = build_code(3, 8, 6)
    rng = LCG64(3)
    pts = [index_point(rng.below(512), 8, 3) for _ in range(8)]
    targets = pts + pts  # every target twice
    plan = plan_batch(code, 2, targets)
    check_plan(code, plan)
    assert plan.max_overlap < 2


def test_capacity_exceeded():
    code = build_code(2, 8, 6)
    with pytest.raises(CapacityError):
        plan_batch(code, 2, [(0, 0)] * 3)
    with pytest.raises(ValueError):
        plan_batch(code, 3, [(0, 0)])  # d != q - r


def test_zero_codeword_recovers_zero():
    code = build_code(2, 8, 4)
    w = encode(code, [0] * code.dimension)
    plan = plan_batch(code, 4, [(1, 1), (2, 3), (1, 1), (7, 0)])
    assert execute_batch(code, w, plan) == [0, 0, 0, 0]


def test_monomial_codeword_recovery():
    code = build_code(2, 16, 14)
    w = encode(code, [int(e == code.basis[-1]) for e in code.basis])
    plan = plan_batch(code, 2, [(5, 6), (11, 0)])
    assert execute_batch(code, w, plan) == [w[(5, 6)], w[(11, 0)]]


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32), st.sampled_from([(2, 8, 1), (2, 8, 3), (2, 4, 2), (3, 4, 1)]))
def test_random_batches(seed, params):
    m, q, r = params
    code = build_code(m, q, q - r)
    rng = LCG64(seed)
    w = encode(code, [rng.below(q) for _ in range(code.dimension)])
    k = 1 + rng.below(capacity(m, q, r))
    targets = [index_point(rng.below(q**m), q, m) for _ in range(k)]
    plan = plan_batch(code, r, targets)
    assert execute_batch(code, w, plan) == [w[t] for t in targets]


def test_tampered_plan_rejected():
    code = build_code(2, 8, 6)
    plan = plan_batch(code, 2, [(1, 2), (1, 2)])
    text = dump_plan(plan)
    assert load_plan(text, code) == plan
    first, second = text.splitlines()
    reads = first.split("reads=")[1]
    bad = second.split("reads=")[0] + "reads=" + reads
    with pytest.raises(ValueError):
        check_plan(code, load_plan(first + "\n" + bad + "\n", code))


def test_binary_expansion():
    code = build_code(2, 4, 3)
    b = binary_expand(code)
    assert (b.N_prime, b.n_prime, b.bits_per_symbol) == (32, 2 * code.dimension, 2)
    one_bit = binary_expand(build_code(2, 2, 1))
    assert one_bit.N_prime == 4
    assert symbols_to_bits([1, 2], 2) == [1, 0, 0, 1]
    w = encode(code, [1] * code.dimension)
    code4 = build_code(2, 4, 3)
    plan = plan_batch(code4, 1, [(2, 3)])
    val = w[(2, 3)]
    assert [recover_bit(code4, w, plan.sets[0], bit) for bit in range(2)] == [val & 1, val >> 1]
