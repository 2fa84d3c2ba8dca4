"""Scalar promotion rules over mixed BigInt/BigFloat operands."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abacus import errors
from abacus.bignum import (BigFloat, BigInt, PrecisionContext, sc_add,
                           sc_arith, sc_cmp, sc_div, sc_mul, sc_pow, sc_sub)

from .oracles import check_rne, scalar_to_fraction


def test_int_ops_stay_exact(ctx2):
    a, b = BigInt(7), BigInt(-3)
    assert isinstance(sc_add(a, b, ctx2), BigInt)
    assert sc_add(a, b, ctx2).value == 4
    assert sc_mul(a, b, ctx2).value == -21
    assert sc_sub(a, b, ctx2).value == 10
    huge = BigInt(10**50)
    assert sc_mul(huge, huge, ctx2).value == 10**100


def test_int_division_promotes_only_when_inexact(ctx2):
    assert isinstance(sc_div(BigInt(6), BigInt(3), ctx2), BigInt)
    assert sc_div(BigInt(6), BigInt(3), ctx2).value == 2
    q = sc_div(BigInt(1), BigInt(3), ctx2)
    assert isinstance(q, BigFloat)
    assert check_rne(q, Fraction(1, 3))
    with pytest.raises(errors.DivisionByZero):
        sc_div(BigInt(1), BigInt(0), ctx2)


def test_int_pow(ctx2):
    assert sc_pow(BigInt(2), BigInt(100), ctx2).value == 2**100
    r = sc_pow(BigInt(3), BigInt(-5), ctx2)
    assert isinstance(r, BigFloat)
    assert check_rne(r, Fraction(1, 243))
    with pytest.raises(errors.DivisionByZero):
        sc_pow(BigInt(0), BigInt(-1), ctx2)


def test_mixed_promotes_to_float(ctx2):
    x = BigFloat.from_ratio(1, 4, ctx2.bits)
    r = sc_add(BigInt(1), x, ctx2)
    assert isinstance(r, BigFloat)
    assert check_rne(r, Fraction(5, 4))


def test_float_pow_int_exponent(ctx2):
    x = BigFloat.from_ratio(3, 2, ctx2.bits)
    assert check_rne(sc_pow(x, BigInt(10), ctx2), Fraction(3, 2) ** 10)
    assert check_rne(sc_pow(x, BigInt(-3), ctx2), Fraction(2, 3) ** 3)
    assert sc_pow(x, BigInt(0), ctx2).compare(
        BigFloat.from_int(1, ctx2.bits)) == 0


def test_float_pow_fractional_exponent(ctx6):
    import mpmath as mp
    x = BigFloat.from_ratio(5, 2, ctx6.bits)
    h = BigFloat.from_ratio(1, 2, ctx6.bits)
    r = sc_pow(x, h, ctx6)
    with mp.workprec(ctx6.bits + 64):
        want = mp.sqrt(mp.mpf(5) / 2)
        f = scalar_to_fraction(r)
        got = mp.mpf(f.numerator) / f.denominator
        assert abs(got - want) / want < 2.0 ** (-(ctx6.bits - 2))
    with pytest.raises(errors.DomainError):
        sc_pow(BigFloat.from_int(-2, ctx6.bits), h, ctx6)


def test_sc_cmp_mixed_exact(ctx2):
    assert sc_cmp(BigInt(3), BigFloat.from_int(3, 64)) == 0
    # 2**200 - 1 rounds to 2**200 at 64 bits; the exact comparison sees it
    assert sc_cmp(BigInt(2**200 - 1), BigFloat.from_int(2**200 - 1, 64)) < 0
    assert sc_cmp(BigInt(2**200 + 1), BigFloat.from_int(2**200, 64)) > 0
    assert sc_cmp(BigFloat.from_ratio(1, 3, 64), BigInt(1)) < 0


def test_sc_arith_unknown_op(ctx2):
    with pytest.raises(errors.EvalTypeError):
        sc_arith("mod", BigInt(1), BigInt(2), ctx2)


@settings(max_examples=200, deadline=None)
@given(st.integers(-10**12, 10**12), st.integers(-10**12, 10**12),
       st.sampled_from(["add", "sub", "mul"]))
def test_property_int_ops_match_python(a, b, op):
    ctx = PrecisionContext(2)
    r = sc_arith(op, BigInt(a), BigInt(b), ctx)
    want = {"add": a + b, "sub": a - b, "mul": a * b}[op]
    assert isinstance(r, BigInt) and r.value == want


@settings(max_examples=200, deadline=None)
@given(st.integers(-10**9, 10**9), st.integers(1, 10**9))
def test_property_div_matches_fraction(a, b):
    ctx = PrecisionContext(2)
    r = sc_div(BigInt(a), BigInt(b), ctx)
    f = Fraction(a, b)
    if f.denominator == 1:
        assert isinstance(r, BigInt) and r.value == f
    else:
        assert check_rne(r, f)
