"""Complex numbers over BigInt/BigFloat components."""

from .. import errors
from .context import PrecisionContext
from .numeric import Scalar, sc_add, sc_div, sc_is_zero, sc_mul, sc_neg, sc_sub


class BigComplex:
    __slots__ = ("re", "im")

    def __init__(self, re: Scalar, im: Scalar):
        self.re = re
        self.im = im

    @property
    def is_zero(self) -> bool:
        return sc_is_zero(self.re) and sc_is_zero(self.im)

    def conjugate(self) -> "BigComplex":
        return BigComplex(self.re, sc_neg(self.im))

    def __repr__(self):
        return f"BigComplex({self.re!r}, {self.im!r})"


def complex_arith(op: str, a: BigComplex, b: BigComplex,
                  ctx: PrecisionContext) -> BigComplex:
    if op == "add":
        return BigComplex(sc_add(a.re, b.re, ctx), sc_add(a.im, b.im, ctx))
    if op == "sub":
        return BigComplex(sc_sub(a.re, b.re, ctx), sc_sub(a.im, b.im, ctx))
    if op == "mul":
        re = sc_sub(sc_mul(a.re, b.re, ctx), sc_mul(a.im, b.im, ctx), ctx)
        im = sc_add(sc_mul(a.re, b.im, ctx), sc_mul(a.im, b.re, ctx), ctx)
        return BigComplex(re, im)
    if op == "div":
        if b.is_zero:
            raise errors.DivisionByZero("complex division by zero")
        den = sc_add(sc_mul(b.re, b.re, ctx), sc_mul(b.im, b.im, ctx), ctx)
        num = complex_arith("mul", a, b.conjugate(), ctx)
        return BigComplex(sc_div(num.re, den, ctx), sc_div(num.im, den, ctx))
    raise errors.EvalTypeError(f"unknown complex operation {op!r}")
