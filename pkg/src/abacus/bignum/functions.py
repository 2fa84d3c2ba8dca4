"""Elementary functions, pi, and the complementary error function.

Strategy shared by all kernels: reduce the argument, evaluate a series in
fixed point at guard precision (context width plus at least 64 bits), and
round once at the end.  Fixed-point values are plain ints scaled by 2**W.
"""

import math

from .. import errors
from . import _kernel
from .bigfloat import BigFloat, fadd, fdiv, fmul, fsub, one
from .context import PrecisionContext

_GUARD = 64

# -- fixed point helpers ------------------------------------------------------


def _to_fixed(x: BigFloat, W: int) -> int:
    """round(x * 2**W) as a signed int."""
    if x.sig == 0:
        return 0
    e = x.exp + W
    if e >= 0:
        v = x.sig << e
    else:
        half = 1 << (-e - 1)
        v = (x.sig + half) >> (-e)
    return v if x.sign > 0 else -v


def _from_fixed(v: int, W: int, bits: int) -> BigFloat:
    if v == 0:
        return BigFloat.zero(bits)
    return BigFloat.from_exact(1 if v > 0 else -1, abs(v), -W, bits)


# -- constants ---------------------------------------------------------------

_pi_cache: dict[int, int] = {}
_ln2_cache: dict[int, int] = {}


def _pi_fixed(W: int) -> int:
    """pi * 2**W via the base-16 digit series
    sum_k 16^-k (4/(8k+1) - 2/(8k+4) - 1/(8k+5) - 1/(8k+6))."""
    cached = _pi_cache.get(W)
    if cached is not None:
        return cached
    Wg = W + 32
    total = 0
    k = 0
    while True:
        e = Wg - 4 * k
        if e < 0:
            break
        total += ((4 << e) // (8 * k + 1)
                  - (2 << e) // (8 * k + 4)
                  - (1 << e) // (8 * k + 5)
                  - (1 << e) // (8 * k + 6))
        k += 1
    v = (total + (1 << 31)) >> 32
    _pi_cache[W] = v
    return v


def _ln2_fixed(W: int) -> int:
    """ln 2 * 2**W via ln 2 = 2 atanh(1/3)."""
    cached = _ln2_cache.get(W)
    if cached is not None:
        return cached
    Wg = W + 32
    v = (2 * _atanh_series_fixed((1 << Wg) // 3, Wg) + (1 << 31)) >> 32
    _ln2_cache[W] = v
    return v


def _sqrt_pi_fixed(W: int) -> int:
    return math.isqrt(_pi_fixed(W) << W)


# -- series kernels (args in fixed point at scale W) -------------------------


def _atanh_series_fixed(t: int, W: int) -> int:
    """sum t^(2k+1)/(2k+1); |t| well below 2**W."""
    neg = t < 0
    if neg:
        t = -t
    tt = (t * t) >> W
    acc = t
    p = t
    k = 1
    while True:
        p = (p * tt) >> W
        if p == 0:
            break
        acc += p // (2 * k + 1)
        k += 1
    return -acc if neg else acc


def _exp_series_fixed(r: int, W: int) -> int:
    """exp(r) at scale W for |r| <= ln2/2."""
    acc = 1 << W
    term = 1 << W
    k = 1
    while True:
        term = ((term * r) >> W) // k
        if term == 0:
            break
        acc += term
        k += 1
    return acc


def _sin_series_fixed(r: int, W: int) -> int:
    neg = r < 0
    if neg:
        r = -r
    rr = (r * r) >> W
    acc = r
    term = r
    k = 1
    while True:
        term = ((term * rr) >> W) // ((2 * k) * (2 * k + 1))
        if term == 0:
            break
        acc += term if k % 2 == 0 else -term
        k += 1
    return -acc if neg else acc


def _cos_series_fixed(r: int, W: int) -> int:
    if r < 0:
        r = -r
    rr = (r * r) >> W
    acc = 1 << W
    term = 1 << W
    k = 1
    while True:
        term = ((term * rr) >> W) // ((2 * k - 1) * (2 * k))
        if term == 0:
            break
        acc += term if k % 2 == 0 else -term
        k += 1
    return acc


# -- public operations --------------------------------------------------------


def pi_bbp(ctx: PrecisionContext) -> BigFloat:
    """pi, correct to the context width."""
    W = ctx.bits + _GUARD
    return _from_fixed(_pi_fixed(W), W, ctx.bits)


def exp_ap(x: BigFloat, ctx: PrecisionContext) -> BigFloat:
    B = ctx.bits
    if x.sig == 0:
        return one(B)
    p = x.mag_exp
    if p > 40:
        raise errors.RangeError("exp argument too large")
    W = B + _GUARD
    W2 = W + max(p, 0) + 2
    ln2 = _ln2_fixed(W2)
    xf = _to_fixed(x, W2)
    k = (2 * xf + ln2) // (2 * ln2)  # nearest multiple of ln 2
    r = xf - k * ln2
    r >>= W2 - W
    e = _exp_series_fixed(r, W)
    return BigFloat.from_exact(1, e, -W + k, B)


def log_ap(x: BigFloat, ctx: PrecisionContext) -> BigFloat:
    if x.sig == 0 or x.sign < 0:
        from .formatting import format_decimal
        raise errors.DomainError(
            f"log requires a positive argument, got {format_decimal(x, ctx.output_digits)}")
    B = ctx.bits
    if x.sig == 1 << (x.bits - 1) and x.exp == 1 - x.bits:
        return BigFloat.zero(B)  # log(1) is exactly 0
    W = B + _GUARD
    # x = f * 2**n with f in [1/2, 1); ln x = n ln2 + 2 atanh((f-1)/(f+1))
    n = x.mag_exp
    f = x.sig << (W - x.bits)
    t = ((f - (1 << W)) << W) // (f + (1 << W))
    v = 2 * _atanh_series_fixed(t, W) + n * _ln2_fixed(W)
    return _from_fixed(v, W, B)


def sqrt_ap(x: BigFloat, ctx: PrecisionContext) -> BigFloat:
    if x.sign < 0 and x.sig != 0:
        from .formatting import format_decimal
        raise errors.DomainError(
            f"sqrt requires a non-negative argument, got {format_decimal(x, ctx.output_digits)}")
    B = ctx.bits
    if x.sig == 0:
        return BigFloat.zero(B)
    x = x.round_to(B)
    g = B + 8
    if (x.exp - g) % 2:
        g += 1
    scaled = x.sig << g
    q = math.isqrt(scaled)
    r = scaled - q * q
    mag = (q << 1) | (1 if r else 0)
    return BigFloat.from_exact(1, mag, (x.exp - g) // 2 - 1, B)


def _trig_reduced(x: BigFloat, ctx: PrecisionContext) -> tuple[int, int, int]:
    """Reduce x mod pi/2.  Returns (r, quadrant, W) with r fixed at scale W."""
    B = ctx.bits
    W = B + _GUARD
    if x.sig == 0:
        return 0, 0, W
    p = x.mag_exp
    if p > 4096:
        raise errors.RangeError("trig argument too large for reduction")
    Wr = W + max(p, 0) + 8
    half_pi = _pi_fixed(Wr) >> 1
    xf = _to_fixed(x, Wr)
    k = (2 * xf + half_pi) // (2 * half_pi)
    r = xf - k * half_pi
    r >>= Wr - W
    return r, k % 4, W


def sin_ap(x: BigFloat, ctx: PrecisionContext) -> BigFloat:
    r, q, W = _trig_reduced(x, ctx)
    if q == 0:
        v = _sin_series_fixed(r, W)
    elif q == 1:
        v = _cos_series_fixed(r, W)
    elif q == 2:
        v = -_sin_series_fixed(r, W)
    else:
        v = -_cos_series_fixed(r, W)
    return _from_fixed(v, W, ctx.bits)


def cos_ap(x: BigFloat, ctx: PrecisionContext) -> BigFloat:
    r, q, W = _trig_reduced(x, ctx)
    if q == 0:
        v = _cos_series_fixed(r, W)
    elif q == 1:
        v = -_sin_series_fixed(r, W)
    elif q == 2:
        v = -_cos_series_fixed(r, W)
    else:
        v = _sin_series_fixed(r, W)
    return _from_fixed(v, W, ctx.bits)


_ELEMENTARY = {
    "log": log_ap,
    "exp": exp_ap,
    "sqrt": sqrt_ap,
    "sin": sin_ap,
    "cos": cos_ap,
}


def elementary(name: str, x: BigFloat, ctx: PrecisionContext) -> BigFloat:
    try:
        fn = _ELEMENTARY[name]
    except KeyError:
        raise errors.UndefinedFunction(f"unknown function {name!r}") from None
    return fn(x, ctx)


# -- complementary error function ---------------------------------------------

_ERFC_SERIES_CUTOFF = 30  # |x| below this: Taylor series; above: Laplace CF


def erfc_ap(x: BigFloat, ctx: PrecisionContext) -> BigFloat:
    B = ctx.bits
    if x.sig == 0:
        return one(B)
    t = x.abs()
    p = t.mag_exp  # t < 2**p
    if t.compare(BigFloat.from_int(_ERFC_SERIES_CUTOFF, 64)) <= 0:
        bound = 1 << max(p, 0)
        W = B + 2 * _GUARD + (3 * bound * bound) // 2 + 16
        v = _erfc_series_fixed(_to_fixed(t, W), W)
        if x.sign < 0:
            v = (2 << W) - v
        return _from_fixed(v, W, B)
    r = _erfc_cf(t, ctx)
    if x.sign < 0:
        two = BigFloat.from_int(2, r.bits)
        gctx = PrecisionContext(ctx.words + 2, ctx.output_digits)
        r = fsub(two, r, gctx)
    return r.round_to(B)


def _erfc_series_fixed(tf: int, W: int) -> int:
    """erfc(t) at scale W via 1 - 2/sqrt(pi) * sum (-1)^n t^(2n+1)/(n!(2n+1)).

    W must include guard room for the cancellation, about 1.5 * t**2 bits.
    """
    tt = (tf * tf) >> W
    u = tf  # u_n = t^(2n+1)/n!
    acc = tf
    n = 0
    while True:
        n += 1
        u = ((u * tt) >> W) // n
        if u == 0:
            break
        d = u // (2 * n + 1)
        acc += d if n % 2 == 0 else -d
    erf = (acc << (W + 1)) // _sqrt_pi_fixed(W)
    return (1 << W) - erf


def _erfc_cf(t: BigFloat, ctx: PrecisionContext) -> BigFloat:
    """Laplace continued fraction, fast for large |t|:
    erfc(t) = exp(-t^2)/sqrt(pi) * 1/(t + (1/2)/(t + 1/(t + (3/2)/(t + ...)))).
    Evaluated by the modified Lentz method at guard precision."""
    g = PrecisionContext(ctx.words + 3, ctx.output_digits)
    B = g.bits
    onef = one(B)
    eps_exp = -(ctx.bits + 32)
    # Lentz with b_n = t, a_1 = 1, a_n = (n-1)/2 for n >= 2
    f = t
    c = t
    d = BigFloat.zero(B)
    n = 1
    while n < 100000:
        n += 1
        a = BigFloat.from_ratio(n - 1, 2, B)
        d = fadd(t, fmul(a, d, g), g)
        c = fadd(t, fdiv(a, c, g), g)
        d = fdiv(onef, d, g)
        delta = fmul(c, d, g)
        f = fmul(f, delta, g)
        dev = fsub(delta, onef, g)
        if dev.sig == 0 or dev.mag_exp < eps_exp:
            break
    # f now holds t + a2/(t + ...); erfc = exp(-t^2)/sqrt(pi) / f
    tsq = fmul(t, t, g)
    et = exp_ap(tsq.neg(), g)
    spi = _from_fixed(_sqrt_pi_fixed(B + 32), B + 32, B)
    return fdiv(fdiv(et, spi, g), f, g)
