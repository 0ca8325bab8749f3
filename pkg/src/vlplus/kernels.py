"""Backend selection for the hot kernels.

The compiled extension ``vlplus._kernels`` is used when it imports; otherwise
the pure-Python module is used. Setting ``VLPLUS_PURE_PYTHON=1`` forces the
fallback. ``BACKEND`` names the active choice.
"""
from __future__ import annotations

import os
from functools import lru_cache

from . import _kernels_py

if os.environ.get("VLPLUS_PURE_PYTHON"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

bareiss_det = _impl.bareiss_det
creation_series = _impl.creation_series


@lru_cache(maxsize=200_000)
def apply_field(factors, m, target, mono, two_k, den, momentum):
    """Memoized wrapper; returns a ``{monomial: Fraction}`` dict that callers must not mutate."""
    return _impl.apply_field(factors, m, target, mono, two_k, den, momentum)


def use_backend(name: str):
    """Switch backend at runtime (used by the benchmark and backend tests)."""
    global _impl, BACKEND, bareiss_det, creation_series
    if name == "python":
        _impl = _kernels_py
    elif name == "cython":
        from . import _kernels as compiled  # type: ignore[attr-defined]
        _impl = compiled
    else:
        raise ValueError(f"unknown backend {name!r}")
    BACKEND = name
    bareiss_det = _impl.bareiss_det
    creation_series = _impl.creation_series
    apply_field.cache_clear()


def clear_caches():
    """Drop memoized kernel results in both backends (for cold timings)."""
    apply_field.cache_clear()
    _kernels_py.creation_series.cache_clear()
    _kernels_py.creation_levels.cache_clear()
    try:
        from . import _kernels as compiled  # type: ignore[attr-defined]
    except ImportError:
        return
    compiled.clear_cache()


def raw(name: str):
    """The un-memoized kernel module for ``name``."""
    if name == "python":
        return _kernels_py
    from . import _kernels as compiled  # type: ignore[attr-defined]
    return compiled
