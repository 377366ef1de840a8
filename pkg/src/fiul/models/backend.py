"""Kernel backend selection: numba-jitted loops or vectorized numpy.

The numerically hot inner loops (tree split search, SMO pair updates) exist
in two drop-in implementations.  The numba one is the default; setting
``FIUL_DISABLE_NUMBA=1`` (or running where numba is not importable) selects
the pure-numpy fallback.  Both compute the same IEEE operations in the same
order, so fitted models do not depend on the backend choice.
"""

from __future__ import annotations

import os
import warnings

_ENV_FLAG = "FIUL_DISABLE_NUMBA"

_forced: str | None = None
_modules: dict[str, object] = {}


def _env_disabled() -> bool:
    return os.environ.get(_ENV_FLAG, "").strip().lower() in ("1", "true", "yes", "on")


def _load(name: str):
    if name not in _modules:
        if name == "numba":
            from . import _kernels_numba as mod
        else:
            from . import _kernels_numpy as mod
        _modules[name] = mod
    return _modules[name]


def active_backend() -> str:
    """Name of the backend the next kernel call will use."""
    if _forced is not None:
        return _forced
    if _env_disabled():
        return "numpy"
    try:
        import numba  # noqa: F401
    except ImportError:
        return "numpy"
    return "numba"


def force_backend(name: str | None) -> None:
    """Override backend selection ('numba', 'numpy', or None to reset)."""
    global _forced
    if name not in (None, "numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    _forced = name


def kernels():
    """Return the active kernel module, falling back to numpy if needed."""
    name = active_backend()
    if name == "numba":
        try:
            return _load("numba")
        except ImportError:
            warnings.warn("numba unavailable, using numpy kernels", RuntimeWarning)
            return _load("numpy")
    return _load("numpy")
