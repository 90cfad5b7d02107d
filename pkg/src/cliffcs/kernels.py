"""Selects the compiled reduction kernel when available.

Set CLIFFCS_PURE_PYTHON=1 to force the pure-Python fallback.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from typing import Iterator

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("CLIFFCS_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py

reduce_loop = _impl.reduce_loop
row_key = _impl.row_key
apply_column = _impl.apply_column


def backends() -> dict:
    """Every importable backend keyed by name, for benchmarking."""
    out = {"python": _kernels_py}
    try:
        from . import _ckernels

        out["cython"] = _ckernels
    except ImportError:
        pass
    return out


@contextmanager
def use_backend(name: str) -> Iterator[None]:
    """Temporarily route every kernel call through the named backend."""
    global reduce_loop, row_key, apply_column, BACKEND
    mod = backends()[name]
    saved = reduce_loop, row_key, apply_column, BACKEND
    reduce_loop, row_key, apply_column, BACKEND = mod.reduce_loop, mod.row_key, mod.apply_column, name
    try:
        yield
    finally:
        reduce_loop, row_key, apply_column, BACKEND = saved
