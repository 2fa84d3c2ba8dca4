"""Independent reference implementations used to check the package.

Everything here is built on exact rational arithmetic (fractions),
mpmath, or scipy -- never on the code under test.
"""

import math
from fractions import Fraction

from abacus.bignum import BigFloat, BigInt


def bf_to_fraction(x: BigFloat) -> Fraction:
    if x.sig == 0:
        return Fraction(0)
    return Fraction(x.sign * x.sig) * Fraction(2) ** x.exp


def scalar_to_fraction(x) -> Fraction:
    if isinstance(x, BigInt):
        return Fraction(x.value)
    return bf_to_fraction(x)


def rne_fraction(f: Fraction, bits: int):
    """Round a rational to `bits` significand bits, nearest-even.

    Returns (sign, sig, exp) in the same normalization the package uses:
    value = sign * sig * 2**exp with sig exactly `bits` bits wide.
    """
    if f == 0:
        return (0, 0, 0)
    sign = 1 if f > 0 else -1
    p, q = abs(f).numerator, abs(f).denominator
    s = bits - (p.bit_length() - q.bit_length())

    def floor_div(shift):
        num = p << shift if shift >= 0 else p
        den = q if shift >= 0 else q << (-shift)
        return divmod(num, den) + (den,)

    m, r, den = floor_div(s)
    while m.bit_length() < bits:
        s += 1
        m, r, den = floor_div(s)
    while m.bit_length() > bits:
        s -= 1
        m, r, den = floor_div(s)
    if 2 * r > den or (2 * r == den and (m & 1)):
        m += 1
        if m.bit_length() > bits:
            m >>= 1
            s -= 1
    return (sign, m, -s)


def check_rne(x: BigFloat, f: Fraction) -> bool:
    """Does x equal f correctly rounded to x.bits significand bits?"""
    if f == 0:
        return x.sig == 0
    return (x.sign, x.sig, x.exp) == rne_fraction(f, x.bits)


def float_op_oracle(op: str, a: BigFloat, b: BigFloat, bits: int):
    """Exact rational result of a float op, as a Fraction."""
    # operands are first rounded to the working precision, like fadd & co.
    fa = Fraction(*rne_to_ratio(bf_to_fraction(a), bits))
    fb = Fraction(*rne_to_ratio(bf_to_fraction(b), bits))
    if op == "add":
        return fa + fb
    if op == "sub":
        return fa - fb
    if op == "mul":
        return fa * fb
    if op == "div":
        return fa / fb
    raise ValueError(op)


def rne_to_ratio(f: Fraction, bits: int):
    sign, sig, exp = rne_fraction(f, bits)
    if sig == 0:
        return (0, 1)
    v = Fraction(sign * sig) * Fraction(2) ** exp
    return (v.numerator, v.denominator)


# -- quadrature oracles for test p-values --------------------------------------


def normal_two_sided_p(z: float) -> float:
    """2 * P(Z > |z|) by adaptive quadrature of the standard normal pdf."""
    from scipy.integrate import quad

    pdf = lambda t: math.exp(-t * t / 2.0) / math.sqrt(2.0 * math.pi)
    tail, _ = quad(pdf, abs(z), math.inf)
    return 2.0 * tail


def student_two_sided_p(t: float, df: int) -> float:
    """2 * P(T > |t|) by quadrature of the t density."""
    from scipy.integrate import quad

    c = math.exp(math.lgamma((df + 1) / 2.0) - math.lgamma(df / 2.0)) \
        / math.sqrt(df * math.pi)
    pdf = lambda u: c * (1.0 + u * u / df) ** (-(df + 1) / 2.0)
    tail, _ = quad(pdf, abs(t), math.inf)
    return 2.0 * tail
