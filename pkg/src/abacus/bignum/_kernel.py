"""Kernel selection: compiled limb kernel when available, pure Python otherwise.

Set ABACUS_KERNEL=python to force the fallback, ABACUS_KERNEL=c to require
the compiled extension (ImportError if it was not built).
"""

import os

from . import _kernel_py

_choice = os.environ.get("ABACUS_KERNEL", "").strip().lower()

if _choice == "python":
    _impl = _kernel_py
elif _choice in ("c", "accel", "cython"):
    from . import _accel as _impl
else:
    try:
        from . import _accel as _impl
    except ImportError:
        _impl = _kernel_py

mul = _impl.mul
divmod_big = _impl.divmod_big
BACKEND = _impl.BACKEND
