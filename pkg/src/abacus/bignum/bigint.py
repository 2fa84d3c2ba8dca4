"""Arbitrary-precision integers with exact arithmetic."""

from .. import errors
from . import _kernel
from .bigfloat import BigFloat, fdiv
from .context import PrecisionContext


class BigInt:
    """Sign/magnitude integer; the magnitude is a variable-length limb string."""

    __slots__ = ("value",)

    def __init__(self, value: int):
        self.value = int(value)

    @property
    def sign(self) -> int:
        v = self.value
        return (v > 0) - (v < 0)

    @property
    def magnitude_limbs(self) -> tuple[int, ...]:
        """32-bit words of |value|, most significant first, no leading zeros."""
        mag = abs(self.value)
        out = []
        while mag:
            out.append(mag & 0xFFFFFFFF)
            mag >>= 32
        return tuple(reversed(out))

    def to_bigfloat(self, bits: int) -> BigFloat:
        return BigFloat.from_int(self.value, bits)

    def __eq__(self, other):
        return isinstance(other, BigInt) and self.value == other.value

    def __hash__(self):
        return hash(("BigInt", self.value))

    def __repr__(self):
        return f"BigInt({self.value})"


def int_arith(op: str, a: BigInt, b: BigInt,
              ctx: PrecisionContext | None = None):
    """Exact integer arithmetic; division promotes to float when inexact.

    Returns BigInt for add/sub/mul/pow and exact div, BigFloat otherwise
    (the promotion needs a context).
    """
    av, bv = a.value, b.value
    if op == "add":
        return BigInt(av + bv)
    if op == "sub":
        return BigInt(av - bv)
    if op == "mul":
        sign = 1 if (av < 0) == (bv < 0) else -1
        return BigInt(sign * _kernel.mul(abs(av), abs(bv)))
    if op == "pow":
        if bv < 0:
            raise errors.DomainError("integer power requires a non-negative exponent")
        return BigInt(av ** bv)
    if op == "div":
        if bv == 0:
            raise errors.DivisionByZero("division by zero")
        q, r = divmod(av, bv)
        if r == 0:
            return BigInt(q)
        if ctx is None:
            raise errors.EvalTypeError("inexact integer division needs a precision context")
        return fdiv(a.to_bigfloat(ctx.bits), b.to_bigfloat(ctx.bits), ctx)
    raise errors.EvalTypeError(f"unknown integer operation {op!r}")
