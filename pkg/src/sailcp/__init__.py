"""Suffix array + LCP array construction in one pass of induced sorting.

The package ships two interchangeable backends:

* a pure-Python implementation (:mod:`sailcp.sais`,
  :mod:`sailcp.inducing`) that exposes every intermediate step and
  instrumentation counter, and
* a compiled extension (:mod:`sailcp._kernels`) with the same
  semantics for the hot loops, selected automatically when available.

The functions below are the public facade; they accept raw bytes (or
a :class:`~sailcp.core.Text`) and return numpy index arrays.
"""

from __future__ import annotations

import numpy as np

from .core import Text
from .inducing import (
    SSTAR_LCP_METHODS,
    TRACKER_KINDS,
    InduceOptions,
    build_sa_and_lcp as _py_sa_and_lcp,
)
from .reference import VerifyReport, verify
from .sais import build_suffix_array as _py_suffix_array

try:
    from . import _kernels
except ImportError:  # pragma: no cover - build-environment dependent
    _kernels = None

HAVE_COMPILED = _kernels is not None

BACKENDS = ("auto", "python", "compiled")

__all__ = [
    "BACKENDS",
    "HAVE_COMPILED",
    "InduceOptions",
    "SSTAR_LCP_METHODS",
    "TRACKER_KINDS",
    "Text",
    "VerifyReport",
    "build_sa_and_lcp",
    "build_suffix_array",
    "kasai_lcp",
    "phi_lcp",
    "verify",
]


def _as_bytes(data) -> bytes:
    if isinstance(data, Text):
        return bytes(data.data)
    return bytes(data)


def _index_dtype(n: int):
    return np.int32 if n + 1 < 2 ** 31 else np.int64


def _pick_backend(backend: str, *, compiled_ok: bool = True) -> str:
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend: {backend!r}")
    if backend == "compiled":
        if not HAVE_COMPILED:
            raise RuntimeError("compiled backend is not available")
        if not compiled_ok:
            raise ValueError(
                "compiled backend does not support this configuration")
        return "compiled"
    if backend == "auto" and HAVE_COMPILED and compiled_ok:
        return "compiled"
    return "python"


def build_suffix_array(data, backend: str = "auto") -> np.ndarray:
    """Suffix array of ``data`` (bytes), via induced sorting."""
    raw = _as_bytes(data)
    if _pick_backend(backend) == "compiled":
        return _kernels.suffix_array(raw)
    sa = _py_suffix_array(Text.from_bytes(raw))
    return np.asarray(sa, dtype=_index_dtype(len(raw)))


def build_sa_and_lcp(data, options: InduceOptions | None = None,
                     backend: str = "auto", stats: dict | None = None):
    """Suffix array and LCP array of ``data`` in one inducing pass.

    ``options`` selects the per-bucket minimum tracker and the method
    for the S*-suffix LCP values.  The compiled backend covers the
    default S*-method (the sparse predecessor scan) and runs without
    instrumentation; asking for ``stats`` or the recursive S*-method
    routes to the pure-Python implementation under ``backend="auto"``.
    """
    opts = options or InduceOptions()
    raw = _as_bytes(data)
    compiled_ok = opts.sstar_lcp_method == "sparse_phi" and stats is None
    if _pick_backend(backend, compiled_ok=compiled_ok) == "compiled":
        return _kernels.sa_and_lcp(raw, opts.tracker_kind)
    sa, lcp = _py_sa_and_lcp(Text.from_bytes(raw), opts, stats=stats)
    dtype = _index_dtype(len(raw))
    return np.asarray(sa, dtype=dtype), np.asarray(lcp, dtype=dtype)


def kasai_lcp(data, sa, backend: str = "auto") -> np.ndarray:
    """LCP array from a finished suffix array via the rank array."""
    from . import reference

    raw = _as_bytes(data)
    if _pick_backend(backend) == "compiled":
        sa = np.ascontiguousarray(sa, dtype=_index_dtype(len(raw)))
        return _kernels.kasai(raw, sa)
    lcp = reference.kasai_lcp(raw, list(sa))
    return np.asarray(lcp, dtype=_index_dtype(len(raw)))


def phi_lcp(data, sa, backend: str = "auto") -> np.ndarray:
    """LCP array from a finished suffix array via the predecessor permutation."""
    from . import reference

    raw = _as_bytes(data)
    if _pick_backend(backend) == "compiled":
        sa = np.ascontiguousarray(sa, dtype=_index_dtype(len(raw)))
        return _kernels.phi(raw, sa)
    lcp = reference.phi_lcp(raw, list(sa))
    return np.asarray(lcp, dtype=_index_dtype(len(raw)))
