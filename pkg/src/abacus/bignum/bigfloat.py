"""Multiple-precision binary floating point.

A BigFloat is sign * sig * 2**exp where sig is an integer magnitude with
exactly ``bits`` significant bits (the normalization invariant: the top
bit of the leading limb is set).  There are no infinities or NaNs;
invalid operations raise instead.  All operations round once, to the
context width, round-to-nearest-even.
"""

from .. import errors
from . import _kernel
from .context import PrecisionContext

_EXP_LIMIT = 1 << 63


def _round_norm(mag: int, exp: int, bits: int) -> tuple[int, int]:
    """Round mag * 2**exp (mag > 0) to ``bits`` significand bits, RNE.

    The low bit of ``mag`` may be a sticky tag standing for "something
    non-zero below"; callers keep at least two extra bits so the tag sits
    below the round bit.
    """
    shift = mag.bit_length() - bits
    if shift <= 0:
        sig = mag << (-shift)
    else:
        sig = mag >> shift
        half = 1 << (shift - 1)
        low = mag & ((1 << shift) - 1)
        if low > half or (low == half and (sig & 1)):
            sig += 1
            if sig.bit_length() > bits:
                sig >>= 1
                shift += 1
    e2 = exp + shift
    if not -_EXP_LIMIT < e2 < _EXP_LIMIT:
        raise errors.RangeError("binary exponent out of range")
    return sig, e2


class BigFloat:
    __slots__ = ("sign", "sig", "exp", "bits")

    def __init__(self, sign: int, sig: int, exp: int, bits: int):
        # Trusted raw constructor; use the from_* builders elsewhere.
        self.sign = sign
        self.sig = sig
        self.exp = exp
        self.bits = bits

    # -- builders ----------------------------------------------------------

    @classmethod
    def zero(cls, bits: int) -> "BigFloat":
        return cls(1, 0, 0, bits)

    @classmethod
    def from_exact(cls, sign: int, mag: int, exp: int, bits: int) -> "BigFloat":
        """Round mag * 2**exp to ``bits`` bits and attach a sign."""
        if mag == 0:
            return cls.zero(bits)
        sig, e = _round_norm(mag, exp, bits)
        return cls(sign, sig, e, bits)

    @classmethod
    def from_int(cls, n: int, bits: int) -> "BigFloat":
        return cls.from_exact(-1 if n < 0 else 1, abs(n), 0, bits)

    @classmethod
    def from_ratio(cls, num: int, den: int, bits: int) -> "BigFloat":
        """Correctly rounded num/den."""
        if den == 0:
            raise errors.DivisionByZero("division by zero")
        sign = -1 if (num < 0) != (den < 0) else 1
        num, den = abs(num), abs(den)
        if num == 0:
            return cls.zero(bits)
        shift = bits + 2 - (num.bit_length() - den.bit_length())
        if shift >= 0:
            q, r = _kernel.divmod_big(num << shift, den)
        else:
            q, r = _kernel.divmod_big(num, den << (-shift))
        mag = (q << 1) | (1 if r else 0)
        return cls.from_exact(sign, mag, -shift - 1, bits)

    @classmethod
    def from_float(cls, x: float, bits: int) -> "BigFloat":
        num, den = float(x).as_integer_ratio()
        return cls.from_ratio(num, den, bits)

    # -- views -------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.sig == 0

    @property
    def limbs(self) -> tuple[int, ...]:
        """Significand as 32-bit words, most significant first."""
        words = max(1, self.bits // 32)
        sig = self.sig
        out = []
        for _ in range(words):
            out.append(sig & 0xFFFFFFFF)
            sig >>= 32
        return tuple(reversed(out))

    def round_to(self, bits: int) -> "BigFloat":
        if bits == self.bits:
            return self
        if self.sig == 0:
            return BigFloat.zero(bits)
        return BigFloat.from_exact(self.sign, self.sig, self.exp, bits)

    def neg(self) -> "BigFloat":
        if self.sig == 0:
            return self
        return BigFloat(-self.sign, self.sig, self.exp, self.bits)

    def abs(self) -> "BigFloat":
        if self.sign < 0:
            return self.neg()
        return self

    @property
    def mag_exp(self) -> int:
        """p such that 2**(p-1) <= |x| < 2**p (undefined for zero)."""
        return self.exp + self.bits

    def compare(self, other: "BigFloat") -> int:
        """Exact three-way value comparison, independent of widths."""
        if self.sig == 0 and other.sig == 0:
            return 0
        if self.sig == 0:
            return -other.sign
        if other.sig == 0:
            return self.sign
        if self.sign != other.sign:
            return 1 if self.sign > other.sign else -1
        c = self._cmp_mag(other)
        return c * self.sign

    def _cmp_mag(self, other: "BigFloat") -> int:
        pa, pb = self.mag_exp, other.mag_exp
        if pa != pb:
            return 1 if pa > pb else -1
        # align to a common exponent and compare magnitudes exactly
        e = min(self.exp, other.exp)
        a = self.sig << (self.exp - e)
        b = other.sig << (other.exp - e)
        return (a > b) - (a < b)

    def __eq__(self, other):
        if not isinstance(other, BigFloat):
            return NotImplemented
        return self.compare(other) == 0

    __hash__ = None

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def __repr__(self):
        if self.sig == 0:
            return f"BigFloat(0, bits={self.bits})"
        s = "-" if self.sign < 0 else ""
        return f"BigFloat({s}{self.sig}*2**{self.exp}, bits={self.bits})"


def one(bits: int) -> BigFloat:
    return BigFloat(1, 1 << (bits - 1), 1 - bits, bits)


# -- arithmetic -------------------------------------------------------------


def fadd(a: BigFloat, b: BigFloat, ctx: PrecisionContext) -> BigFloat:
    return _addsub(a, b, ctx, 1)


def fsub(a: BigFloat, b: BigFloat, ctx: PrecisionContext) -> BigFloat:
    return _addsub(a, b, ctx, -1)


def _addsub(a: BigFloat, b: BigFloat, ctx: PrecisionContext, bmult: int) -> BigFloat:
    B = ctx.bits
    a = a.round_to(B)
    b = b.round_to(B)
    sa, sb = a.sign, b.sign * bmult
    if a.sig == 0 and b.sig == 0:
        return BigFloat.zero(B)
    if a.sig == 0:
        return BigFloat(sb, b.sig, b.exp, B)
    if b.sig == 0:
        return a
    # both significands have exactly B bits, so (exp, sig) orders magnitudes
    if (b.exp, b.sig) > (a.exp, a.sig):
        a, b = b, a
        sa, sb = sb, sa
    d = a.exp - b.exp
    if sa == sb:
        if d <= B + 3:
            mag, e = (a.sig << d) + b.sig, b.exp
        else:
            # the smaller operand only matters as a sticky bit
            mag, e = (a.sig << (B + 3)) | 1, a.exp - (B + 3)
    else:
        if d <= B + 3:
            mag, e = (a.sig << d) - b.sig, b.exp
            if mag == 0:
                return BigFloat.zero(B)
        else:
            mag, e = (a.sig << (B + 3)) - 1, a.exp - (B + 3)
    return BigFloat.from_exact(sa, mag, e, B)


def fmul(a: BigFloat, b: BigFloat, ctx: PrecisionContext) -> BigFloat:
    B = ctx.bits
    a = a.round_to(B)
    b = b.round_to(B)
    if a.sig == 0 or b.sig == 0:
        return BigFloat.zero(B)
    mag = _kernel.mul(a.sig, b.sig)
    return BigFloat.from_exact(a.sign * b.sign, mag, a.exp + b.exp, B)


def fdiv(a: BigFloat, b: BigFloat, ctx: PrecisionContext) -> BigFloat:
    B = ctx.bits
    a = a.round_to(B)
    b = b.round_to(B)
    if b.sig == 0:
        raise errors.DivisionByZero("division by zero")
    if a.sig == 0:
        return BigFloat.zero(B)
    q, r = _kernel.divmod_big(a.sig << (B + 3), b.sig)
    mag = (q << 1) | (1 if r else 0)
    return BigFloat.from_exact(a.sign * b.sign, mag,
                               a.exp - b.exp - (B + 3) - 1, B)


def float_arith(op: str, a: BigFloat, b: BigFloat, ctx: PrecisionContext) -> BigFloat:
    """Dispatch table entry point: op in {add, sub, mul, div}."""
    try:
        fn = _FLOAT_OPS[op]
    except KeyError:
        raise errors.EvalTypeError(f"unknown float operation {op!r}") from None
    return fn(a, b, ctx)


_FLOAT_OPS = {"add": fadd, "sub": fsub, "mul": fmul, "div": fdiv}
