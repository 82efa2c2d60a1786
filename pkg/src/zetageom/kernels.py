"""Kernel backend selection and the shared double-word log cache.

The compiled extension (zetageom._kernels, Cython) is preferred; the NumPy
twin (zetageom._kernels_py) is used when the extension is missing or when
ZETAGEOM_BACKEND=python is set. Both expose the same functions:

    dw_log_range, reduce_tlog, reduce_ts_ln, step_components,
    sum_chunk, z_cos_sum

ln(n) values are t-independent, so a process-wide cache keeps the double-word
logs for n up to a cap; ranges beyond the cap are recomputed per chunk.
"""

from __future__ import annotations

import os

import numpy as np

_choice = os.environ.get("ZETAGEOM_BACKEND", "auto").lower()
if _choice not in ("auto", "python", "compiled"):
    raise ValueError(f"ZETAGEOM_BACKEND must be auto|python|compiled, got {_choice!r}")

if _choice == "python":
    from . import _kernels_py as backend
else:
    try:
        from . import _kernels as backend  # type: ignore[attr-defined]
    except ImportError:
        if _choice == "compiled":
            raise
        from . import _kernels_py as backend

BACKEND = backend.BACKEND_NAME
BLOCK = backend.BLOCK

dw_log_range = backend.dw_log_range
reduce_tlog = backend.reduce_tlog
reduce_ts_ln = backend.reduce_ts_ln
step_components = backend.step_components
sum_chunk = backend.sum_chunk
z_cos_sum = backend.z_cos_sum

_CACHE_CAP = 1 << 22
_log_hi = np.zeros(1)
_log_lo = np.zeros(1)  # index n stored at position n-1


def cached_logs(n_hi: int):
    """Double-word ln arrays covering 1..n_hi (grown on demand, capped)."""
    global _log_hi, _log_lo
    if n_hi > _CACHE_CAP:
        raise ValueError("range beyond cache cap; use log_range")
    if n_hi > len(_log_hi):
        size = len(_log_hi)
        while size < n_hi:
            size *= 2
        size = min(size, _CACHE_CAP)
        hi, lo = dw_log_range(len(_log_hi) + 1, size - len(_log_hi))
        _log_hi = np.concatenate([_log_hi, hi])
        _log_lo = np.concatenate([_log_lo, lo])
    return _log_hi, _log_lo


def log_range(n_lo: int, n_hi: int):
    """Double-word ln(n) for n in [n_lo, n_hi], cache-backed when possible."""
    if n_hi <= _CACHE_CAP:
        hi, lo = cached_logs(n_hi)
        return hi[n_lo - 1:n_hi], lo[n_lo - 1:n_hi]
    return dw_log_range(n_lo, n_hi - n_lo + 1)
