from fractions import Fraction
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from exactreal.errors import DomainError, EmptyQuotient, InvalidApartness, InvalidTolerance
from exactreal.rational import ONE, Rat, ZERO
from exactreal.reals import (
    ApartnessWitness,
    Real,
    approx,
    const_e,
    const_pi,
    const_sqrt,
    find_apartness,
    geometric_sum_real,
    raw_div,
    real_arith,
    real_div,
    real_eq_test,
    real_from_rat,
    real_lt_test,
    real_sqrt,
)
from exactreal.sequences import RatSeq, alternating, check_cauchy_to_depth, constant, harmonic

PI_DIGITS = "3.14159265358979323846264338327950288419716939937510"


def digits_oracle(text: str) -> Fraction:
    return Fraction(text)


def e_oracle() -> Fraction:
    return sum(Fraction(1, math.factorial(k)) for k in range(60))


def sqrt_oracle(q: Fraction, places: int = 60) -> Fraction:
    # floor(sqrt(q) * 10^places) via integer square root
    scale = 10 ** (2 * places)
    return Fraction(math.isqrt(q.numerator * scale // q.denominator), 10**places)


def close(value: Rat, oracle: Fraction, tol) -> bool:
    return abs(Fraction(value.numerator, value.denominator) - oracle) <= Fraction(tol)


def test_from_rat_examples():
    for q in (ZERO, ONE, Rat(7, 3)):
        r = real_from_rat(q)
        assert r.seq.take(5) == [q] * 5
        assert r.modulus(Rat(1, 10**9)) == 0


def test_constant_arithmetic():
    s = real_arith("add", real_from_rat(Rat(1, 2)), real_from_rat(Rat(1, 3)))
    assert s.seq.take(4) == [Rat(5, 6)] * 4


def test_sqrt2_squared():
    two = const_sqrt(2)
    prod = real_arith("mul", two, two)
    assert close(approx(prod, Rat(1, 10**6)), Fraction(2), Fraction(1, 10**6))


def test_pi_minus_pi():
    pi = const_pi()
    diff = real_arith("add", real_arith("neg", pi), pi)
    for k in range(0, 9):
        eps = Rat(1, 10**k)
        assert abs(approx(diff, eps)) <= eps


def test_constants_against_oracles():
    eps = Rat(1, 10**30)
    assert close(approx(const_pi(), eps), digits_oracle(PI_DIGITS), Fraction(1, 10**30))
    assert close(approx(const_e(), eps), e_oracle(), Fraction(1, 10**30))
    assert close(approx(const_sqrt(2), eps), sqrt_oracle(Fraction(2)), Fraction(1, 10**30))
    assert close(approx(const_sqrt(Rat(2, 3)), eps), sqrt_oracle(Fraction(2, 3)), Fraction(1, 10**30))


def test_constant_examples():
    assert approx(const_sqrt(4), Rat(1, 10**9)) == Rat(2)
    assert close(approx(const_pi(), Rat(1, 10**6)), Fraction("3.141592"), Fraction(2, 10**6))
    assert close(approx(const_sqrt(2), Rat(1, 10**6)), Fraction("1.414213"), Fraction(2, 10**6))
    assert close(approx(const_sqrt(2), Rat(1, 10**3)), Fraction("1.414"), Fraction(1, 10**3))


def test_sqrt_rejects_negative():
    with pytest.raises(DomainError):
        const_sqrt(Rat(-1, 4))
    with pytest.raises(DomainError):
        real_sqrt(real_from_rat(Rat(-1)))


def test_real_sqrt_of_irrational():
    r = real_sqrt(const_pi())
    oracle = sqrt_oracle(digits_oracle(PI_DIGITS))
    assert close(approx(r, Rat(1, 10**20)), oracle, Fraction(1, 10**20))


def test_division_examples():
    half = real_div(real_from_rat(1), real_from_rat(2), ApartnessWitness(Rat(2), 0))
    assert half.seq.take(3) == [Rat(1, 2)] * 3
    pi = const_pi()
    quotient = real_div(pi, const_sqrt(2), find_apartness(const_sqrt(2)))
    value = approx(quotient, Rat(1, 10**4))
    assert close(value, digits_oracle(PI_DIGITS) / sqrt_oracle(Fraction(2)), Fraction(1, 10**4))
    assert value.to_decimal(4) == "2.2214"


def test_division_by_zero_real_is_rejected():
    zero = real_from_rat(ZERO)
    with pytest.raises(InvalidApartness):
        real_div(real_from_rat(1), zero, ApartnessWitness(Rat(1, 2), 0))
    with pytest.raises(InvalidApartness):
        find_apartness(real_arith("sub", const_pi(), const_pi()))
    with pytest.raises(InvalidApartness):
        real_div(real_from_rat(1), real_from_rat(2), ApartnessWitness(Rat(-1), 0))


def test_raw_div_examples():
    one = raw_div(harmonic(1), harmonic(1))
    assert all(v == ONE for v in one.take(50))
    two = raw_div(harmonic(2), harmonic(1))
    assert all(v == Rat(2) for v in two.take(50))
    wobble = raw_div(alternating(1) * harmonic(1), harmonic(1))
    assert wobble.take(4) == [ONE, -ONE, ONE, -ONE]
    assert not check_cauchy_to_depth(wobble, Rat(1, 2), 10).holds


def test_raw_div_skips_zero_denominators():
    gappy = RatSeq(lambda n: ZERO if n % 3 == 0 else Rat(1, n + 1))
    q = raw_div(harmonic(1), gappy)
    assert q.take(4) == [ONE] * 4
    with pytest.raises(EmptyQuotient):
        raw_div(harmonic(1), constant(ZERO), scan_bound=100)


def test_eq_examples():
    assert real_eq_test(geometric_sum_real(), real_from_rat(1), Rat(1, 10**6), 64).is_true
    assert real_eq_test(real_from_rat(0), real_from_rat(1), Rat(1, 2), 64).is_false
    pi = const_pi()
    assert real_eq_test(pi, pi, Rat(1, 10**12), 8).is_true


def test_eq_rejects_bad_eps():
    with pytest.raises(InvalidTolerance):
        real_eq_test(real_from_rat(0), real_from_rat(0), ZERO, 10)


def test_eq_witness_is_sound():
    pi, e = const_pi(), const_e()
    v = real_eq_test(pi, e, Rat(1, 2), 64)
    # pi - e = 0.42..., so closeness within 1/2 is provable
    assert v.is_true
    t, settle = v.witness
    assert t < Rat(1, 2) and settle >= 0


def test_lt_examples():
    v = real_lt_test(real_from_rat(0), real_from_rat(1), 64)
    assert v.is_true and v.witness[0] <= Rat(1, 2)
    pi = const_pi()
    for depth in (1, 10, 100):
        assert real_lt_test(pi, pi, depth).is_unknown
    assert real_lt_test(geometric_sum_real(), real_from_rat(1), 100).is_unknown
    assert real_lt_test(const_e(), const_pi(), 64).is_true
    assert real_lt_test(const_pi(), const_e(), 64).is_unknown


def _random_real(rng: random.Random, depth: int = 2) -> Real:
    leaves = [
        lambda: const_pi(),
        lambda: const_e(),
        lambda: const_sqrt(Rat(rng.randint(2, 50), rng.randint(1, 9))),
        lambda: real_from_rat(Rat(rng.randint(-20, 20), rng.randint(1, 9))),
        lambda: geometric_sum_real(),
    ]
    if depth == 0 or rng.random() < 0.3:
        return rng.choice(leaves)()
    op = rng.choice(["add", "sub", "mul", "neg", "div"])
    x = _random_real(rng, depth - 1)
    if op == "neg":
        return real_arith("neg", x)
    y = _random_real(rng, depth - 1)
    if op == "div":
        try:
            return real_div(x, y, find_apartness(y))
        except InvalidApartness:
            return real_arith("add", x, y)
    return real_arith(op, x, y)


def check_modulus(x: Real, eps: Rat, span: int = 6) -> bool:
    n = x.modulus(eps)
    terms = [x.seq(n + 1 + i) for i in range(span)]
    return all(abs(a - b) < eps for a in terms for b in terms)


def test_modulus_soundness_spot_checks():
    rng = random.Random(20240611)
    for _ in range(100):
        x = _random_real(rng)
        eps = Rat(1, rng.choice([2, 10, 1000, 10**6]))
        assert check_modulus(x, eps), x.description


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 40))
def test_triangle_readout(k):
    # readouts at e1 and e2 differ by less than max(e1, e2)
    x = real_arith("mul", const_pi(), const_sqrt(3))
    e1, e2 = Rat(1, 2**k), Rat(1, 3**(k // 2 + 1))
    assert abs(approx(x, e1) - approx(x, e2)) < max(e1, e2)
