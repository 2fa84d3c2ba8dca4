"""Limb-based multiple-precision arithmetic engine."""

from ._kernel import BACKEND as KERNEL_BACKEND
from .bigcomplex import BigComplex, complex_arith
from .bigfloat import BigFloat, fadd, fdiv, float_arith, fmul, fsub, one
from .bigint import BigInt, int_arith
from .context import PrecisionContext
from .formatting import downcast_double, format_decimal, parse_decimal
from .functions import cos_ap, elementary, erfc_ap, exp_ap, log_ap, pi_bbp, sin_ap, sqrt_ap
from .numeric import (Scalar, as_float, is_scalar, sc_abs, sc_add, sc_arith, sc_cmp,
                      sc_div, sc_is_zero, sc_mul, sc_neg, sc_pow, sc_sub)

__all__ = [
    "KERNEL_BACKEND",
    "BigComplex", "complex_arith",
    "BigFloat", "fadd", "fdiv", "float_arith", "fmul", "fsub", "one",
    "BigInt", "int_arith",
    "PrecisionContext",
    "downcast_double", "format_decimal", "parse_decimal",
    "cos_ap", "elementary", "erfc_ap", "exp_ap", "log_ap", "pi_bbp", "sin_ap", "sqrt_ap",
    "Scalar", "as_float", "is_scalar", "sc_abs", "sc_add", "sc_arith", "sc_cmp",
    "sc_div", "sc_is_zero", "sc_mul", "sc_neg", "sc_pow", "sc_sub",
]
