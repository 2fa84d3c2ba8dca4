"""Compare the compiled and pure-Python integer kernels.

Runs the raw magnitude kernels (multiply, divmod) on random operands of
increasing width, then times an end-to-end pi computation through each
backend.  Backend selection happens at import time via ABACUS_KERNEL, so
this script re-executes itself once per backend.

Usage: python3 benchmarks/bench_kernel.py
"""

import os
import random
import subprocess
import sys
import time


def _bench_backend():
    from abacus.bignum._kernel import BACKEND, divmod_big, mul
    from abacus.bignum import PrecisionContext, pi_bbp, format_decimal
    import abacus.bignum.functions as fns

    print(f"backend: {BACKEND}")
    rng = random.Random(20260823)
    for bits in (256, 1024, 4096, 16384):
        xs = [(rng.getrandbits(bits) | (1 << (bits - 1)),
               rng.getrandbits(bits) | (1 << (bits - 1)))
              for _ in range(200)]
        t0 = time.perf_counter()
        for a, b in xs:
            mul(a, b)
        t_mul = time.perf_counter() - t0
        t0 = time.perf_counter()
        for a, b in xs:
            divmod_big(a << bits, b)
        t_div = time.perf_counter() - t0
        print(f"  {bits:>6} bits: mul {t_mul * 1e6 / len(xs):8.1f} us/op   "
              f"divmod {t_div * 1e6 / len(xs):8.1f} us/op")

    fns._pi_cache.clear()
    ctx = PrecisionContext(64)  # 2048-bit pi
    t0 = time.perf_counter()
    value = pi_bbp(ctx)
    dt = time.perf_counter() - t0
    digits = format_decimal(value, 20)
    print(f"  pi at {ctx.bits} bits: {dt * 1e3:.1f} ms  ({digits}...)")


def main():
    if os.environ.get("_BENCH_CHILD"):
        _bench_backend()
        return
    for backend in ("python", "c"):
        env = dict(os.environ, ABACUS_KERNEL=backend, _BENCH_CHILD="1")
        res = subprocess.run([sys.executable, os.path.abspath(__file__)],
                             env=env)
        if res.returncode != 0:
            sys.exit(res.returncode)


if __name__ == "__main__":
    main()
