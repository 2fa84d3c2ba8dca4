"""Pure-Python magnitude kernel.

CPython's ``int`` is itself a limb-based bignum implemented in C, so the
portable fallback simply delegates to it.  The compiled kernel in
``_accel`` replaces these with explicit 32-bit limb loops.
"""

BACKEND = "python"


def mul(a: int, b: int) -> int:
    """Product of two non-negative magnitudes."""
    return a * b


def divmod_big(a: int, b: int) -> tuple[int, int]:
    """Quotient and remainder of two non-negative magnitudes."""
    return divmod(a, b)
