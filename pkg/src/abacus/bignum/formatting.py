"""Decimal printing, literal parsing and double downcast.

Printing rounds half-up in decimal (arithmetic itself rounds to nearest
even in binary); trailing fractional zeros and a bare trailing point are
stripped, integers print with no fractional part.
"""

import math
import re

from .. import errors
from .bigfloat import BigFloat, _round_norm
from .bigint import BigInt
from .context import PrecisionContext

# beyond these limits positional notation would be absurd; switch to e-notation
_POSITIONAL_MAX_EXP = 10000
# refuse to expand values whose binary magnitude is astronomically large
_FORMAT_BIT_LIMIT = 1 << 22

_NUMBER_RE = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)")


def format_decimal(x: BigFloat | BigInt, output_digits: int) -> str:
    if output_digits < 1:
        raise errors.DomainError("output digits must be >= 1")
    if isinstance(x, BigInt):
        return _format_int(x.value, output_digits)
    return _format_float(x, output_digits)


def _format_int(n: int, digits: int) -> str:
    if n == 0:
        return "0"
    sign = "-" if n < 0 else ""
    s = str(abs(n))
    if len(s) <= digits:
        return sign + s
    k = len(s) - digits
    q, r = divmod(abs(n), 10 ** k)
    if 2 * r >= 10 ** k:
        q += 1
    return sign + str(q) + "0" * k


def _format_float(x: BigFloat, digits: int) -> str:
    if x.sig == 0:
        return "0"
    p = x.mag_exp
    if abs(p) > _FORMAT_BIT_LIMIT:
        raise errors.RangeError("value too large to format")
    sign = "-" if x.sign < 0 else ""
    q, e10 = _decimal_digits(x, digits)
    s = str(q)
    if 0 <= e10 < digits:
        ip, fp = s[: e10 + 1], s[e10 + 1:].rstrip("0")
        body = ip + ("." + fp if fp else "")
    elif e10 >= digits:
        if e10 > _POSITIONAL_MAX_EXP:
            return sign + _scientific(s, e10)
        body = s + "0" * (e10 + 1 - digits)
    else:
        if -e10 > _POSITIONAL_MAX_EXP:
            return sign + _scientific(s, e10)
        body = "0." + "0" * (-e10 - 1) + s.rstrip("0")
    return sign + body


def _scientific(s: str, e10: int) -> str:
    frac = s[1:].rstrip("0")
    mant = s[0] + ("." + frac if frac else "")
    return f"{mant}e{e10}"


def _decimal_digits(x: BigFloat, digits: int) -> tuple[int, int]:
    """First ``digits`` significant decimal digits of |x|, rounded half-up.

    Returns (q, e10) with 10**(digits-1) <= q < 10**digits and
    10**e10 <= |x| < 10**(e10+1).
    """
    p = x.mag_exp
    e10 = (p - 1) * 30103 // 100000
    while _cmp_pow10(x, e10 + 1) >= 0:
        e10 += 1
    while _cmp_pow10(x, e10) < 0:
        e10 -= 1
    t = digits - 1 - e10
    num, den = x.sig, 1
    if x.exp >= 0:
        num <<= x.exp
    else:
        den <<= -x.exp
    if t >= 0:
        num *= 10 ** t
    else:
        den *= 10 ** (-t)
    q, r = divmod(num, den)
    if 2 * r >= den:
        q += 1
    if q >= 10 ** digits:
        q //= 10
        e10 += 1
    return q, e10


def _cmp_pow10(x: BigFloat, k: int) -> int:
    """Exact comparison of |x| against 10**k."""
    lhs, rhs = x.sig, 1
    if x.exp >= 0:
        lhs <<= x.exp
    else:
        rhs <<= -x.exp
    if k >= 0:
        rhs *= 10 ** k
    else:
        lhs *= 10 ** (-k)
    return (lhs > rhs) - (lhs < rhs)


def parse_decimal(literal: str, ctx: PrecisionContext) -> BigInt | BigFloat:
    """Integer literals map to BigInt exactly; fractional ones to the
    nearest BigFloat at the context width."""
    text = literal.strip()
    if not _NUMBER_RE.fullmatch(text):
        raise errors.ParseError(f"malformed number literal {literal!r}", 1, 1)
    if "." not in text:
        return BigInt(int(text))
    sign = -1 if text.startswith("-") else 1
    text = text.lstrip("+-")
    ip, fp = text.split(".")
    num = int((ip or "0") + fp) if fp else int(ip or "0")
    den = 10 ** len(fp)
    return BigFloat.from_ratio(sign * num, den, ctx.bits)


def downcast_double(x: BigFloat | BigInt) -> float:
    """Round-to-nearest conversion to a 64-bit binary float."""
    if isinstance(x, BigInt):
        if x.value == 0:
            return 0.0
        sign = -1 if x.value < 0 else 1
        sig, e = _round_norm(abs(x.value), 0, 53)
    else:
        if x.sig == 0:
            return 0.0
        sign = x.sign
        sig, e = _round_norm(x.sig, x.exp, 53)
    try:
        out = math.ldexp(sig, e)
    except OverflowError:
        raise errors.RangeError("value out of double range") from None
    if math.isinf(out):
        raise errors.RangeError("value out of double range")
    return sign * out
