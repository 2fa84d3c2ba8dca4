"""Arbitrary-precision expression language kernel.

Numbers, complex numbers, vectors and matrices on top of a limb-based
multiple-precision float engine, with statistical tests, dataset import,
SVG charts and printable reports.
"""

from .bignum import KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = ["KERNEL_BACKEND", "__version__"]
