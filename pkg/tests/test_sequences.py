import threading

import pytest
from hypothesis import given, settings, strategies as st

from exactreal.errors import InvalidTolerance
from exactreal.rational import ONE, Rat, ZERO
from exactreal.sequences import (
    CauchyStatus,
    RatSeq,
    alternating,
    check_cauchy_to_depth,
    constant,
    geometric_partial_sums,
    harmonic,
    inverse_powers,
    partial_sums,
    seq_combine,
    seq_eval,
)


def test_eval_examples():
    assert seq_eval(constant(1), 7) == ONE
    assert seq_eval(geometric_partial_sums(2), 3) == Rat(7, 8)
    assert seq_eval(harmonic(), 4) == Rat(1, 5)


def test_combine_examples():
    cancel = seq_combine("add", harmonic(), harmonic(-1))
    assert all(v == ZERO for v in cancel.take(20))
    mixed = seq_combine("interleave", constant(0), constant(1))
    assert mixed.take(6) == [ZERO, ONE, ZERO, ONE, ZERO, ONE]
    assert seq_eval(seq_combine("mul", constant(2), inverse_powers(2)), 3) == Rat(1, 4)
    with pytest.raises(ValueError):
        seq_combine("pow", constant(1), constant(2))


@given(st.integers(0, 200))
def test_combine_agrees_with_termwise_rational_ops(n):
    a, b = harmonic(3), inverse_powers(3, 5)
    assert seq_combine("add", a, b)(n) == a(n) + b(n)
    assert seq_combine("sub", a, b)(n) == a(n) - b(n)
    assert seq_combine("mul", a, b)(n) == a(n) * b(n)


def test_partial_sums_match_closed_form():
    direct = partial_sums(lambda k: Rat(1, 2**k), "sum 2^-k", start=1)
    closed = geometric_partial_sums(2)
    # index n sums k = 1..n+1; out-of-order access exercises the shared prefix
    for n in (9, 3, 0, 15, 4):
        assert direct(n) == closed(n + 1)


def test_memoization_is_invisible_and_thread_safe():
    calls = []

    def gen(n):
        calls.append(n)
        return Rat(n * n, n + 1)

    s = RatSeq(gen)
    results = {}

    def worker(tid):
        results[tid] = [s(n) for n in range(200)]

    threads = [threading.Thread(target=worker, args=(t,)) for t in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    expected = [Rat(n * n, n + 1) for n in range(200)]
    assert all(r == expected for r in results.values())
    assert sorted(calls) == list(range(200))


def test_negative_index_rejected():
    with pytest.raises((IndexError, ValueError)):
        harmonic()(-1)


def test_cauchy_examples():
    v = check_cauchy_to_depth(inverse_powers(2), Rat(1, 10), 50)
    assert v.status is CauchyStatus.HOLDS_TO_DEPTH
    bad = check_cauchy_to_depth(alternating(), Rat(1, 2), 10)
    assert bad.status is CauchyStatus.COUNTEREXAMPLE
    assert bad.witness == (0, 1, Rat(2))
    for eps in (Rat(1, 10**9), Rat(5)):
        assert check_cauchy_to_depth(constant(Rat(3, 7)), eps, 40).holds


def test_cauchy_settle_index_is_tight_for_dyadics():
    # tail of 2^-n beyond m stays within 2^-m of q_m
    v = check_cauchy_to_depth(inverse_powers(2), Rat(1, 1000), 60)
    assert v.settle == 10


def test_cauchy_rejects_bad_tolerance():
    with pytest.raises(InvalidTolerance):
        check_cauchy_to_depth(harmonic(), ZERO, 10)
    with pytest.raises(InvalidTolerance):
        check_cauchy_to_depth(harmonic(), Rat(-1), 10)


@settings(max_examples=30)
@given(st.integers(2, 40), st.integers(0, 30))
def test_oscillating_counterexample_persists_with_depth(depth, extra):
    first = check_cauchy_to_depth(alternating(), Rat(1, 2), depth)
    later = check_cauchy_to_depth(alternating(), Rat(1, 2), depth + extra)
    assert first.witness == later.witness
