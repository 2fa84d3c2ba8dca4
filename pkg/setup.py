from setuptools import Extension, setup

# The compiled magnitude kernel is optional: the package falls back to a
# pure-Python kernel at import time when the extension is unavailable.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "abacus.bignum._accel",
                ["src/abacus/bignum/_accel.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
