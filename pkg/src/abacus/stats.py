"""Descriptive statistics and one-sample hypothesis tests.

Mean and standard deviation accumulate exactly (every operand is a
binary rational) and round once at the context.  The z-test p-value uses
the arbitrary-precision erfc kernel; the t-test p-value the regularized
incomplete beta function, evaluated by a Lentz continued fraction at
guard precision.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from . import errors, viz
from .bignum import (BigFloat, BigInt, PrecisionContext, Scalar, as_float,
                     downcast_double, erfc_ap, sqrt_ap)
from .bignum.bigfloat import fadd, fdiv, fmul, fsub, one
from .linalg import NumVector

ALPHA = Fraction(1, 20)  # fixed 0.05 display threshold for the decision line


def _exact_parts(v: NumVector) -> tuple[list[int], int]:
    """Each element as m * 2**e_min; returns (mantissas, e_min)."""
    pairs = []
    for e in v:
        if isinstance(e, BigInt):
            pairs.append((e.value, 0))
        else:
            pairs.append((e.sign * e.sig if e.sig else 0, e.exp))
    e_min = min((e for _, e in pairs), default=0)
    return [m << (e - e_min) for m, e in pairs], e_min


def _from_ratio_scaled(num: int, den: int, e2: int, ctx: PrecisionContext) -> BigFloat:
    """Correctly rounded num * 2**e2 / den."""
    if e2 >= 0:
        return BigFloat.from_ratio(num << e2, den, ctx.bits)
    return BigFloat.from_ratio(num, den << (-e2), ctx.bits)


def mean(v: NumVector, ctx: PrecisionContext) -> BigFloat:
    n = len(v)
    if n < 1:
        raise errors.DomainError("mean requires at least 1 value")
    ms, e_min = _exact_parts(v)
    return _from_ratio_scaled(sum(ms), n, e_min, ctx)


def stddev(v: NumVector, ctx: PrecisionContext) -> BigFloat:
    """Sample standard deviation (n-1 denominator)."""
    n = len(v)
    if n < 2:
        raise errors.DomainError("stddev requires at least 2 values")
    ms, e_min = _exact_parts(v)
    s = sum(ms)
    num = sum((n * m - s) ** 2 for m in ms)
    var = _from_ratio_scaled(num, n * n * (n - 1), 2 * e_min, ctx)
    return sqrt_ap(var, ctx)


@dataclass
class ZTestResult:
    n: int
    sample_mean: BigFloat
    mu0: Scalar
    sigma: Scalar
    z: BigFloat
    p_two_sided: BigFloat
    alpha: Fraction = ALPHA
    decision: str = ""


@dataclass
class TTestResult:
    n: int
    df: int
    sample_mean: BigFloat
    mu0: Scalar
    sample_stddev: BigFloat
    t: BigFloat
    p_two_sided: BigFloat
    alpha: Fraction = ALPHA
    decision: str = ""


def _decision(p: BigFloat, ctx: PrecisionContext) -> str:
    alpha = BigFloat.from_ratio(ALPHA.numerator, ALPHA.denominator, ctx.bits)
    return "reject" if p.compare(alpha) < 0 else "fail-to-reject"


def _sqrt2(ctx: PrecisionContext) -> BigFloat:
    return sqrt_ap(BigFloat.from_int(2, ctx.bits), ctx)


def ztest(v: NumVector, mu0: Scalar, sigma: Scalar,
          ctx: PrecisionContext) -> ZTestResult:
    """One-sample two-sided z-test with known population stddev."""
    n = len(v)
    if n < 1:
        raise errors.DomainError("ztest requires at least 1 value")
    sigma_f = as_float(sigma, ctx)
    if sigma_f.sig == 0 or sigma_f.sign < 0:
        raise errors.DomainError("ztest requires sigma > 0")
    xbar = mean(v, ctx)
    sqrt_n = sqrt_ap(BigFloat.from_int(n, ctx.bits), ctx)
    z = fdiv(fmul(fsub(xbar, as_float(mu0, ctx), ctx), sqrt_n, ctx), sigma_f, ctx)
    p = erfc_ap(fdiv(z.abs(), _sqrt2(ctx), ctx), ctx)
    return ZTestResult(n, xbar, mu0, sigma, z, p, ALPHA, _decision(p, ctx))


def ttest(v: NumVector, mu0: Scalar, ctx: PrecisionContext) -> TTestResult:
    """One-sample two-sided t-test."""
    n = len(v)
    if n < 2:
        raise errors.DomainError("ttest requires at least 2 values")
    xbar = mean(v, ctx)
    s = stddev(v, ctx)
    if s.sig == 0:
        raise errors.DomainError("ttest requires non-constant data")
    df = n - 1
    sqrt_n = sqrt_ap(BigFloat.from_int(n, ctx.bits), ctx)
    t = fdiv(fmul(fsub(xbar, as_float(mu0, ctx), ctx), sqrt_n, ctx), s, ctx)
    if t.sig == 0:
        p = one(ctx.bits)
    else:
        # p = I_{df/(df+t^2)}(df/2, 1/2)
        tsq = fmul(t, t, ctx)
        dff = BigFloat.from_int(df, ctx.bits)
        x = fdiv(dff, fadd(dff, tsq, ctx), ctx)
        p = betainc_reg_half(df, 1, x, ctx)
    return TTestResult(n, df, xbar, mu0, s, t, p, ALPHA, _decision(p, ctx))


# -- regularized incomplete beta for half-integer parameters -----------------


def _gamma_half(k: int) -> tuple[Fraction, int]:
    """Gamma(k/2) as (rational, s) meaning rational * pi**(s/2), s in {0,1}."""
    if k == 1:
        return Fraction(1), 1
    if k == 2:
        return Fraction(1), 0
    q, s = _gamma_half(k - 2)
    return q * Fraction(k - 2, 2), s


def _ln_free_beta(a2: int, b2: int, ctx: PrecisionContext) -> BigFloat:
    """B(a2/2, b2/2) computed from closed-form half-integer gammas."""
    qa, sa = _gamma_half(a2)
    qb, sb = _gamma_half(b2)
    qab, sab = _gamma_half(a2 + b2)
    ratio = qa * qb / qab
    val = BigFloat.from_ratio(ratio.numerator, ratio.denominator, ctx.bits)
    spow = sa + sb - sab
    if spow == 0:
        return val
    from .bignum.functions import _pi_fixed, _sqrt_pi_fixed, _from_fixed
    W = ctx.bits + 32
    if spow == 1:
        pi_part = _from_fixed(_sqrt_pi_fixed(W), W, ctx.bits)
    elif spow == 2:
        pi_part = _from_fixed(_pi_fixed(W), W, ctx.bits)
    else:
        raise AssertionError(f"unexpected pi power {spow}")
    return fmul(val, pi_part, ctx)


def betainc_reg_half(a2: int, b2: int, x: BigFloat,
                     ctx: PrecisionContext) -> BigFloat:
    """I_x(a2/2, b2/2) for positive half-integer parameters, 0 <= x <= 1."""
    g = PrecisionContext(ctx.words + 3, ctx.output_digits)
    B = g.bits
    onef = one(B)
    if x.sig == 0:
        return BigFloat.zero(ctx.bits)
    if x.compare(onef) >= 0:
        return one(ctx.bits)
    # bt = x^a (1-x)^b / B(a, b)
    xa = _pow_half(x, a2, g)
    xb = _pow_half(fsub(onef, x, g), b2, g)
    bt = fdiv(fmul(xa, xb, g), _ln_free_beta(a2, b2, g), g)
    # use the CF on the side where it converges quickly
    threshold = BigFloat.from_ratio(a2 + 2, a2 + b2 + 4, B)
    if x.compare(threshold) < 0:
        cf = _betacf_half(a2, b2, x, g, ctx.bits)
        out = fdiv(fmul(bt, cf, g), BigFloat.from_ratio(a2, 2, B), g)
    else:
        cf = _betacf_half(b2, a2, fsub(onef, x, g), g, ctx.bits)
        out = fsub(onef, fdiv(fmul(bt, cf, g), BigFloat.from_ratio(b2, 2, B), g), g)
    return out.round_to(ctx.bits)


def _pow_half(x: BigFloat, k2: int, ctx: PrecisionContext) -> BigFloat:
    """x**(k2/2) for non-negative x."""
    from .bignum.numeric import _fpow_int
    if k2 % 2 == 0:
        return _fpow_int(x, k2 // 2, ctx)
    return _fpow_int(sqrt_ap(x, ctx), k2, ctx)


def _betacf_half(a2: int, b2: int, x: BigFloat, g: PrecisionContext,
                 result_bits: int) -> BigFloat:
    """Continued fraction for the incomplete beta (modified Lentz)."""
    B = g.bits
    onef = one(B)
    tiny = BigFloat.from_exact(1, 1, -(4 * B), B)
    eps_exp = -(result_bits + 24)

    def guarded(v: BigFloat) -> BigFloat:
        return tiny if v.sig == 0 else v

    c = onef
    # d = 1 - (a+b) x / (a+1)
    d = fsub(onef, fmul(BigFloat.from_ratio(a2 + b2, a2 + 2, B), x, g), g)
    d = fdiv(onef, guarded(d), g)
    h = d
    for m in range(1, 20000):
        m4 = 4 * m
        # even step: aa = m (b - m) x / ((a - 1 + 2m)(a + 2m))
        num = 2 * m * (b2 - 2 * m)
        den = (a2 - 2 + m4) * (a2 + m4)
        aa = fmul(BigFloat.from_ratio(num, den, B), x, g)
        d = fdiv(onef, guarded(fadd(onef, fmul(aa, d, g), g)), g)
        c = guarded(fadd(onef, fdiv(aa, c, g), g))
        h = fmul(h, fmul(d, c, g), g)
        # odd step: aa = -(a + m)(a + b + m) x / ((a + 2m)(a + 1 + 2m))
        num = (a2 + 2 * m) * (a2 + b2 + 2 * m)
        den = (a2 + m4) * (a2 + 2 + m4)
        aa = fmul(BigFloat.from_ratio(-num, den, B), x, g)
        d = fdiv(onef, guarded(fadd(onef, fmul(aa, d, g), g)), g)
        c = guarded(fadd(onef, fdiv(aa, c, g), g))
        delta = fmul(d, c, g)
        h = fmul(h, delta, g)
        dev = fsub(delta, onef, g)
        if dev.sig == 0 or dev.mag_exp < eps_exp:
            return h
    raise errors.RangeError("incomplete beta continued fraction did not converge")


# -- histogram ----------------------------------------------------------------


def frequency(v: NumVector, bins: int | None = None) -> viz.ChartSpec:
    """Histogram chart: equal-width right-open bins, last bin closed."""
    n = len(v)
    if n < 1:
        raise errors.DomainError("frequency requires at least 1 value")
    if bins is None:
        bins = math.ceil(math.sqrt(n))
    if bins < 1:
        raise errors.DomainError("bin count must be >= 1")
    data = [downcast_double(e) for e in v]
    lo, hi = min(data), max(data)
    if lo == hi:
        hi = lo + 1.0
    width = (hi - lo) / bins
    counts = [0] * bins
    for val in data:
        i = int((val - lo) / width)
        if i >= bins:  # max value lands in the closed last bin
            i = bins - 1
        counts[i] += 1
    edges = [lo + i * width for i in range(bins + 1)]
    return viz.ChartSpec("histogram", [], [float(c) for c in counts], edges=edges)
