"""Dispatch for the hot summation loops.

The compiled extension ``zetaphase._ckernels`` is used when it imports;
otherwise the pure-Python ``zetaphase._pykernels`` takes over. Both expose
the same four functions and agree to rounding level.
"""

from __future__ import annotations

import contextlib
from types import ModuleType

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_BACKENDS: dict[str, ModuleType] = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["cython"] = _ckernels

_active: ModuleType = _ckernels if _ckernels is not None else _pykernels


def available_backends() -> list[str]:
    return list(_BACKENDS)


def backend_name() -> str:
    return _active.NAME


def get_backend(name: str) -> ModuleType:
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown or unavailable kernel backend {name!r}") from None


def set_backend(name: str) -> None:
    global _active
    _active = get_backend(name)


@contextlib.contextmanager
def using_backend(name: str):
    """Temporarily switch the active backend (not thread-safe; for tests and benchmarks)."""
    global _active
    prev = _active
    _active = get_backend(name)
    try:
        yield _active
    finally:
        _active = prev


def phase_sum(t: float, n_terms: int) -> tuple[float, float]:
    return _active.phase_sum(t, n_terms)


def identity_sum(t: float, n_terms: int) -> tuple[float, float]:
    return _active.identity_sum(t, n_terms)


def weierstrass_sum(s_re: float, s_im: float, n_terms: int) -> tuple[float, float, float]:
    return _active.weierstrass_sum(s_re, s_im, n_terms)


def eta_sum(s_re: float, s_im: float, n: int) -> tuple[float, float, float]:
    return _active.eta_sum(s_re, s_im, n)
