"""Promotion rules and arithmetic over mixed BigInt/BigFloat scalars.

Integer pairs stay exact (division promotes only when inexact); anything
mixed is carried out in BigFloat at the context width.  These helpers are
what complex, vector, matrix and statistics code build on.
"""

from .. import errors
from .bigfloat import BigFloat, fadd, fdiv, fmul, fsub, one
from .bigint import BigInt, int_arith
from .context import PrecisionContext
from .functions import exp_ap, log_ap

Scalar = BigInt | BigFloat


def is_scalar(v) -> bool:
    return isinstance(v, (BigInt, BigFloat))


def as_float(v: Scalar, ctx: PrecisionContext) -> BigFloat:
    if isinstance(v, BigInt):
        return v.to_bigfloat(ctx.bits)
    return v


def sc_add(a: Scalar, b: Scalar, ctx: PrecisionContext) -> Scalar:
    if isinstance(a, BigInt) and isinstance(b, BigInt):
        return int_arith("add", a, b)
    return fadd(as_float(a, ctx), as_float(b, ctx), ctx)


def sc_sub(a: Scalar, b: Scalar, ctx: PrecisionContext) -> Scalar:
    if isinstance(a, BigInt) and isinstance(b, BigInt):
        return int_arith("sub", a, b)
    return fsub(as_float(a, ctx), as_float(b, ctx), ctx)


def sc_mul(a: Scalar, b: Scalar, ctx: PrecisionContext) -> Scalar:
    if isinstance(a, BigInt) and isinstance(b, BigInt):
        return int_arith("mul", a, b)
    return fmul(as_float(a, ctx), as_float(b, ctx), ctx)


def sc_div(a: Scalar, b: Scalar, ctx: PrecisionContext) -> Scalar:
    if isinstance(a, BigInt) and isinstance(b, BigInt):
        return int_arith("div", a, b, ctx)
    return fdiv(as_float(a, ctx), as_float(b, ctx), ctx)


def sc_pow(a: Scalar, b: Scalar, ctx: PrecisionContext) -> Scalar:
    if isinstance(b, BigInt):
        if isinstance(a, BigInt):
            if b.value >= 0:
                return int_arith("pow", a, b)
            if a.value == 0:
                raise errors.DivisionByZero("zero to a negative power")
            # correctly rounded 1 / a**|b|
            mag = a.value ** (-b.value)
            return BigFloat.from_ratio(1, mag, ctx.bits)
        return _fpow_int(a, b.value, ctx)
    # fractional exponent: exp(b log a), positive base only
    af = as_float(a, ctx)
    bf = as_float(b, ctx)
    if af.sig == 0:
        if bf.sign > 0:
            return BigFloat.zero(ctx.bits)
        raise errors.DomainError("zero base requires a positive exponent")
    if af.sign < 0:
        raise errors.DomainError("negative base with a fractional exponent")
    return exp_ap(fmul(bf, log_ap(af, ctx), ctx), ctx)


def _fpow_int(a: BigFloat, n: int, ctx: PrecisionContext) -> BigFloat:
    if n == 0:
        return one(ctx.bits)
    if a.sig == 0:
        if n > 0:
            return BigFloat.zero(ctx.bits)
        raise errors.DivisionByZero("zero to a negative power")
    # binary powering at a little extra precision, rounded once
    g = PrecisionContext(ctx.words + 2, ctx.output_digits)
    acc = one(g.bits)
    base = a.round_to(g.bits)
    e = abs(n)
    while e:
        if e & 1:
            acc = fmul(acc, base, g)
        e >>= 1
        if e:
            base = fmul(base, base, g)
    if n < 0:
        acc = fdiv(one(g.bits), acc, g)
    return acc.round_to(ctx.bits)


def sc_neg(a: Scalar) -> Scalar:
    if isinstance(a, BigInt):
        return BigInt(-a.value)
    return a.neg()


def sc_abs(a: Scalar) -> Scalar:
    if isinstance(a, BigInt):
        return BigInt(abs(a.value))
    return a.abs()


def sc_is_zero(a: Scalar) -> bool:
    if isinstance(a, BigInt):
        return a.value == 0
    return a.sig == 0


def sc_cmp(a: Scalar, b: Scalar) -> int:
    """Exact three-way comparison of mixed scalars."""
    if isinstance(a, BigInt) and isinstance(b, BigInt):
        return (a.value > b.value) - (a.value < b.value)
    fa = a if isinstance(a, BigFloat) else _int_as_exact_float(a)
    fb = b if isinstance(b, BigFloat) else _int_as_exact_float(b)
    return fa.compare(fb)


def _int_as_exact_float(n: BigInt) -> BigFloat:
    # wide enough that the conversion is exact
    v = abs(n.value)
    bits = max(32, ((v.bit_length() + 31) // 32) * 32)
    return BigFloat.from_int(n.value, bits)


_BINOPS = {
    "add": sc_add,
    "sub": sc_sub,
    "mul": sc_mul,
    "div": sc_div,
    "pow": sc_pow,
}


def sc_arith(op: str, a: Scalar, b: Scalar, ctx: PrecisionContext) -> Scalar:
    try:
        fn = _BINOPS[op]
    except KeyError:
        raise errors.EvalTypeError(f"unknown scalar operation {op!r}") from None
    return fn(a, b, ctx)
