import itertools
import random

import pytest

from monocount.field import MAX_Q, build_field, is_prime, prime_factors
from suite_util import SUITE_FIELDS


def test_prime_helpers():
    assert [m for m in range(20) if is_prime(m)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert prime_factors(360) == [2, 3, 5]
    assert prime_factors(1) == []


def test_f5_generator_is_two():
    ctx = build_field(5, 1)
    assert ctx.q == 5
    assert ctx.generator == 2
    # order 4 by direct powering
    powers = {pow(2, k, 5) for k in range(4)}
    assert powers == {1, 2, 4, 3}


def test_f2_degenerate():
    ctx = build_field(2, 1)
    assert ctx.q == 2
    assert ctx.n == 1
    assert ctx.generator == 1
    assert ctx.units() == [1]


def test_f9_modulus_irreducible_and_generator_order():
    ctx = build_field(3, 2)
    assert ctx.q == 9
    mod = ctx.modulus
    assert len(mod) == 3 and mod[-1] == 1
    # exhaustive root check: no root in F_3 means no linear factor
    for x in range(3):
        assert (mod[0] + mod[1] * x + mod[2] * x * x) % 3 != 0
    # generator order exactly 8 by direct powering
    seen = set()
    x = 1
    for _ in range(8):
        x = ctx.mul(x, ctx.generator)
        seen.add(x)
    assert x == 1 and len(seen) == 8


def test_build_field_errors():
    with pytest.raises(ValueError):
        build_field(4, 1)
    with pytest.raises(ValueError):
        build_field(9, 1)
    with pytest.raises(ValueError):
        build_field(5, 0)
    with pytest.raises(ValueError):
        build_field(2, 17)  # q = 2^17 > MAX_Q


def test_limit_is_at_least_2_16():
    assert MAX_Q >= 1 << 16


def test_build_field_deterministic_and_cached():
    a = build_field(3, 2)
    b = build_field(3, 2)
    assert a is b


@pytest.mark.parametrize("p,e", SUITE_FIELDS)
def test_log_antilog_bijection(p, e):
    ctx = build_field(p, e)
    assert sorted(ctx.antilog) == list(range(1, ctx.q))
    for x in range(1, ctx.q):
        assert ctx.antilog[ctx.log[x]] == x
    for k in range(ctx.n):
        assert ctx.log[ctx.antilog[k]] == k


@pytest.mark.parametrize("p,e", SUITE_FIELDS)
def test_mul_consistent_with_logs(p, e):
    ctx = build_field(p, e)
    rng = random.Random(0)
    for _ in range(200):
        x = ctx.antilog[rng.randrange(ctx.n)]
        y = ctx.antilog[rng.randrange(ctx.n)]
        assert ctx.dlog(ctx.mul(x, y)) == (ctx.dlog(x) + ctx.dlog(y)) % ctx.n


@pytest.mark.parametrize("p,e", SUITE_FIELDS)
def test_frobenius_fixes_prime_field(p, e):
    ctx = build_field(p, e)
    for c in range(p):
        assert ctx.pow(c, p) == c


@pytest.mark.parametrize("p,e", SUITE_FIELDS)
def test_trace_linear_and_surjective(p, e):
    ctx = build_field(p, e)
    for x in ctx.elements():
        for y in ctx.elements():
            assert ctx.trace(ctx.add(x, y)) == (ctx.trace(x) + ctx.trace(y)) % p
    assert set(ctx.trace_table) == set(range(p))


def test_trace_examples():
    assert build_field(2, 2).trace(1) == 0  # 1 + 1 in characteristic 2
    ctx = build_field(7, 1)
    for x in range(7):
        assert ctx.trace(x) == x
    for p, e in SUITE_FIELDS:
        assert build_field(p, e).trace(0) == 0


@pytest.mark.parametrize("p,e", SUITE_FIELDS)
def test_ring_axioms(p, e):
    ctx = build_field(p, e)
    if ctx.q <= 9:
        triples = itertools.product(ctx.elements(), repeat=3)
    else:
        rng = random.Random(1)
        triples = (
            tuple(rng.randrange(ctx.q) for _ in range(3)) for _ in range(300)
        )
    for x, y, z in triples:
        assert ctx.mul(x, ctx.add(y, z)) == ctx.add(ctx.mul(x, y), ctx.mul(x, z))
        assert ctx.mul(ctx.mul(x, y), z) == ctx.mul(x, ctx.mul(y, z))
        assert ctx.add(ctx.add(x, y), z) == ctx.add(x, ctx.add(y, z))


def test_arith_examples():
    f5 = build_field(5, 1)
    assert f5.mul(2, 3) == 1
    assert f5.inv(2) == 3
    f9 = build_field(3, 2)
    assert f9.mul(f9.antilog[3], f9.antilog[7]) == f9.antilog[2]
    for x in range(1, 9):
        assert f9.mul(x, f9.inv(x)) == 1
        assert f9.add(x, f9.neg(x)) == 0
        assert f9.sub(x, x) == 0


def test_zero_division_errors():
    ctx = build_field(5, 1)
    with pytest.raises(ZeroDivisionError):
        ctx.inv(0)
    with pytest.raises(ZeroDivisionError):
        ctx.dlog(0)


def test_dlog_examples():
    for p, e in SUITE_FIELDS:
        ctx = build_field(p, e)
        assert ctx.dlog(1) == 0
        if ctx.n > 1:
            assert ctx.dlog(ctx.generator) == 1
    assert build_field(5, 1).dlog(4) == 2  # 2^2 = 4


def test_pow_conventions():
    ctx = build_field(3, 2)
    assert ctx.pow(0, 0) == 1
    assert ctx.pow(0, 5) == 0
    for x in range(1, 9):
        assert ctx.pow(x, 8) == 1


def test_coeffs_roundtrip():
    ctx = build_field(3, 2)
    for x in ctx.elements():
        assert ctx.from_coeffs(ctx.coeffs(x)) == x
    assert all(0 <= c < 3 for x in ctx.elements() for c in ctx.coeffs(x))
