import random

import pytest

from abacus.bignum import BigFloat, PrecisionContext


@pytest.fixture
def ctx2():
    return PrecisionContext(2)


@pytest.fixture
def ctx6():
    return PrecisionContext(6)


@pytest.fixture
def ctx8():
    return PrecisionContext(8)


def random_bigfloat(rng: random.Random, bits: int, exp_range: int = 400,
                    allow_zero: bool = False) -> BigFloat:
    """Uniformly messy operand: full-width significand, wide exponent."""
    if allow_zero and rng.random() < 0.05:
        return BigFloat.zero(bits)
    sig = rng.getrandbits(bits) | (1 << (bits - 1))
    exp = rng.randint(-exp_range, exp_range)
    sign = rng.choice((1, -1))
    return BigFloat(sign, sig, exp, bits)
