"""Backend selection for the integer kernels.

The compiled extension is used when it imports; otherwise, or when the
``PROOFGRADE_PURE_PYTHON`` environment variable is set to a non-empty value other
than ``0``, the pure-Python module is used. :func:`set_backend` switches at
runtime (benchmarks and tests use it to compare the two).
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_C_MAX_NODES = 64

_impl: ModuleType = _pykernels


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _ckernels is not None else [])


def set_backend(name: str) -> None:
    global _impl
    if name == "python":
        _impl = _pykernels
    elif name == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not built; run `pip install -e .`")
        _impl = _ckernels
    else:
        raise ValueError(f"unknown backend {name!r}")


def backend() -> str:
    return "cython" if _impl is _ckernels else "python"


def lcs_length(a, b) -> int:
    return _impl.lcs_length(a, b)


def best_lcs_over_extensions(pred_masks, seq, cap: int) -> tuple[int, int]:
    if len(pred_masks) > _C_MAX_NODES:
        return _pykernels.best_lcs_over_extensions(pred_masks, seq, cap)
    return _impl.best_lcs_over_extensions(pred_masks, seq, cap)


def mvc_mask(n: int, edges) -> int:
    if n > _C_MAX_NODES:
        return _pykernels.mvc_mask(n, edges)
    return _impl.mvc_mask(n, edges)


if _ckernels is not None and os.environ.get("PROOFGRADE_PURE_PYTHON", "") in ("", "0"):
    _impl = _ckernels
