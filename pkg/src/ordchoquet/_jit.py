"""Backend switch for the bitmask kernels.

Set ``ORDCHOQUET_DISABLE_NUMBA=1`` to force the pure-numpy path, e.g. for
debugging under the interpreter or on platforms without numba.
"""

import os

_FLAG = os.environ.get("ORDCHOQUET_DISABLE_NUMBA", "").strip().lower()
JIT_REQUESTED = _FLAG not in ("1", "true", "yes", "on")

try:
    from numba import njit

    NUMBA_OK = True
except ImportError:  # pragma: no cover - numba is a hard dependency in CI
    NUMBA_OK = False

    def njit(func=None, **kwargs):
        if func is not None:
            return func

        def wrapper(f):
            return f

        return wrapper


JIT_ENABLED = JIT_REQUESTED and NUMBA_OK

__all__ = ["njit", "NUMBA_OK", "JIT_ENABLED", "JIT_REQUESTED"]
