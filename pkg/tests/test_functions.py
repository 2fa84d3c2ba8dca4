"""Elementary functions, pi, and erfc against mpmath."""

import random
from fractions import Fraction

import mpmath as mp
import pytest

from abacus import errors
from abacus.bignum import (BigFloat, PrecisionContext, cos_ap, elementary,
                           erfc_ap, exp_ap, log_ap, pi_bbp, sin_ap, sqrt_ap)
from abacus.bignum.bigfloat import fmul, fsub, one

from .conftest import random_bigfloat
from .oracles import bf_to_fraction


def _as_mpf(x: BigFloat):
    f = bf_to_fraction(x)
    return mp.mpf(f.numerator) / mp.mpf(f.denominator)


def _rel_err(x: BigFloat, want) -> float:
    got = _as_mpf(x)
    if want == 0:
        return abs(got)
    return float(abs(got - want) / abs(want))


def _check(x: BigFloat, want, bits: int):
    # results are rounded once from guard precision: at most 1 ulp off
    assert _rel_err(x, want) < 2.0 ** (-(bits - 2))


@pytest.mark.parametrize("words", [2, 6, 8])
def test_pi_matches_mpmath(words):
    ctx = PrecisionContext(words)
    with mp.workprec(ctx.bits + 64):
        _check(pi_bbp(ctx), mp.pi, ctx.bits)


def test_pi_large_precision():
    ctx = PrecisionContext(32)  # 1024 bits
    with mp.workprec(ctx.bits + 64):
        _check(pi_bbp(ctx), mp.pi, ctx.bits)


@pytest.mark.parametrize("words", [2, 6])
def test_exp_log_sin_cos_sqrt_vs_mpmath(words):
    ctx = PrecisionContext(words)
    rng = random.Random(words)
    with mp.workprec(ctx.bits + 64):
        for _ in range(120):
            # magnitudes in roughly [2^-8, 2^8]
            x = random_bigfloat(rng, ctx.bits)
            x = BigFloat(x.sign, x.sig, rng.randint(-8, 8) - ctx.bits, ctx.bits)
            mx = _as_mpf(x)
            _check(sin_ap(x, ctx), mp.sin(mx), ctx.bits)
            _check(cos_ap(x, ctx), mp.cos(mx), ctx.bits)
            xa = x.abs()
            mxa = abs(mx)
            _check(sqrt_ap(xa, ctx), mp.sqrt(mxa), ctx.bits)
            if xa.sig:
                _check(log_ap(xa, ctx), mp.log(mxa), ctx.bits)
            _check(exp_ap(x, ctx), mp.exp(mx), ctx.bits)


def test_exact_special_points(ctx6):
    b = ctx6.bits
    assert log_ap(one(b), ctx6).sig == 0  # log 1 = 0 exactly
    assert exp_ap(BigFloat.zero(b), ctx6).compare(one(b)) == 0
    assert sin_ap(BigFloat.zero(b), ctx6).sig == 0
    assert cos_ap(BigFloat.zero(b), ctx6).compare(one(b)) == 0
    assert sqrt_ap(BigFloat.from_int(144, b), ctx6).compare(
        BigFloat.from_int(12, b)) == 0


def test_domain_errors(ctx2):
    with pytest.raises(errors.DomainError):
        log_ap(BigFloat.zero(ctx2.bits), ctx2)
    with pytest.raises(errors.DomainError):
        log_ap(BigFloat.from_int(-3, ctx2.bits), ctx2)
    with pytest.raises(errors.DomainError):
        sqrt_ap(BigFloat.from_int(-1, ctx2.bits), ctx2)


def test_range_guards(ctx2):
    with pytest.raises(errors.RangeError):
        exp_ap(BigFloat.from_exact(1, 1, 50, ctx2.bits), ctx2)
    with pytest.raises(errors.RangeError):
        sin_ap(BigFloat.from_exact(1, 1, 5000, ctx2.bits), ctx2)


def test_elementary_dispatch(ctx2):
    x = BigFloat.from_int(2, ctx2.bits)
    assert elementary("log", x, ctx2).compare(log_ap(x, ctx2)) == 0
    with pytest.raises(errors.UndefinedFunction):
        elementary("tan", x, ctx2)


@pytest.mark.parametrize("words", [2, 6])
def test_erfc_series_and_cf_vs_mpmath(words):
    ctx = PrecisionContext(words)
    rng = random.Random(17)
    points = [Fraction(1, 3), Fraction(1), Fraction(5, 2), Fraction(29),
              Fraction(299, 10), Fraction(301, 10), Fraction(35),
              Fraction(60)]
    points += [Fraction(rng.randint(1, 400), rng.randint(1, 10))
               for _ in range(20)]
    with mp.workprec(ctx.bits + 2048):
        for f in points:
            # evaluate the oracle at the rounded argument: erfc's condition
            # number ~2t^2 would otherwise swamp the comparison in the tail
            x = BigFloat.from_ratio(f.numerator, f.denominator, ctx.bits)
            _check(erfc_ap(x, ctx), mp.erfc(_as_mpf(x)), ctx.bits)
            xn = x.neg()
            _check(erfc_ap(xn, ctx), mp.erfc(_as_mpf(xn)), ctx.bits)


def test_erfc_zero(ctx2):
    r = erfc_ap(BigFloat.zero(ctx2.bits), ctx2)
    assert r.compare(one(ctx2.bits)) == 0


def test_identities_residuals(ctx6):
    """sin^2+cos^2-1, exp(log x)-x, sqrt(x)^2-x all below 2^-180."""
    ctx = ctx6
    b = ctx.bits
    bound = Fraction(1, 2 ** 180)
    rng = random.Random(23)
    for _ in range(40):
        x = random_bigfloat(rng, b, exp_range=4).abs()
        s, c = sin_ap(x, ctx), cos_ap(x, ctx)
        r1 = fsub(fsub(one(b), fmul(s, s, ctx), ctx), fmul(c, c, ctx), ctx)
        assert abs(bf_to_fraction(r1)) < bound
        r2 = fsub(exp_ap(log_ap(x, ctx), ctx), x, ctx)
        assert abs(bf_to_fraction(r2) / bf_to_fraction(x)) < bound
        q = sqrt_ap(x, ctx)
        r3 = fsub(fmul(q, q, ctx), x, ctx)
        assert abs(bf_to_fraction(r3) / bf_to_fraction(x)) < bound
