"""Riemann zeta, Riemann-Siegel theta and the Hardy Z function.

These are the independent instruments the phase module is checked against:
zeta itself via the Borwein-accelerated eta series, the functional-equation
factor ``chi``, and zero location on the critical line.
"""

from __future__ import annotations

import cmath
import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import kernels
from .config import DEFAULT_CONFIG, SeriesConfig
from .core_math import log_cos, log_sin
from .errors import AccuracyError, CloseZerosWarning, DomainError, PoleError
from .gamma import log_gamma

__all__ = [
    "SeriesConfig",
    "ZeroRecord",
    "chi",
    "log_chi",
    "zeta",
    "rs_theta",
    "theta",
    "hardy_z",
    "find_zeros",
    "nearest_zero",
]

_LOG_2PI = math.log(2.0 * math.pi)
_LOG_2 = math.log(2.0)
_LOG_PI = math.log(math.pi)
_LOG_BORWEIN = math.log(3.0 + math.sqrt(8.0))

# Stieltjes constants gamma_0 .. gamma_5
_STIELTJES = [
    0.5772156649015329,
    -0.07281584548367672,
    -0.009690363192872318,
    0.0020538344203033458,
    0.0023253700654673,
    0.0007933238173010627,
]

# |1 - 2^(1-s)| below this switches off the eta quotient
_DENOMINATOR_GUARD = 1e-3
_MAX_ETA_TERMS = 350  # Borwein weights overflow past ~400
_SCAN_STEP = 0.05
_BISECT_WIDTH = 1e-9
_CLOSE_ZERO_LEVEL = 1e-3


def _is_real_integer(s: complex) -> bool:
    return s.imag == 0.0 and s.real == math.floor(s.real)


def log_chi(s: complex) -> complex:
    """Logarithm of ``chi(s) = (2 pi)^s / (2 cos(pi s / 2) Gamma(s))``.

    For ``Re s >= 1/2`` this is evaluated as written; on the critical line
    its imaginary part is continuous in ``t`` and vanishes at ``t = 0``.
    Left of the line the equivalent ``(2 pi)^s sin(pi s / 2) Gamma(1 - s) / pi``
    is used, which stays regular where Gamma(s) has poles.
    """
    s = complex(s)
    if _is_real_integer(s) and s.real >= 1 and int(s.real) % 2 == 1:
        raise PoleError(f"chi has a pole at s = {int(s.real)}")
    if s.real >= 0.5:
        return s * _LOG_2PI - _LOG_2 - log_cos(0.5 * math.pi * s) - log_gamma(s)
    if _is_real_integer(s) and int(s.real) % 2 == 0:
        raise PoleError(f"chi vanishes at s = {int(s.real)}; its logarithm is singular")
    return s * _LOG_2PI + log_sin(0.5 * math.pi * s) + log_gamma(1.0 - s) - _LOG_PI


def chi(s: complex) -> complex:
    """The ratio ``zeta(s) / zeta(1 - s)`` from the functional equation."""
    s = complex(s)
    if s.real < 0.5 and _is_real_integer(s) and int(s.real) % 2 == 0:
        return 0j
    return cmath.exp(log_chi(s))


def _eta_terms(s: complex, eps: float) -> int:
    # Borwein: |error in zeta| <= 2 / ((3 + sqrt 8)^n |Gamma(s)| |1 - 2^(1-s)|).
    # A large |Gamma(s)| (big real part) is not allowed to shrink n below the
    # plain (3 + sqrt 8)^-n rate, which is what the weights deliver there.
    if _is_real_integer(s) and s.real <= 0:
        log_recip_gamma = 0.0
    else:
        log_recip_gamma = max(0.0, -log_gamma(s).real)
    den = abs(1.0 - 2.0 ** (1.0 - s))
    need = math.log(2.0 / eps) + log_recip_gamma - math.log(den)
    # left of the critical line the bound is not proven; pad it
    pad = 8 if s.real < 0.5 else 2
    return max(8, math.ceil(need / _LOG_BORWEIN) + pad)


def _eta(s: complex, config: SeriesConfig) -> complex:
    n = _eta_terms(s, config.eps)
    if n > min(config.k_max, _MAX_ETA_TERMS):
        raise AccuracyError(
            f"eta acceleration needs {n} terms at s={s!r}; limit is {min(config.k_max, _MAX_ETA_TERMS)}"
        )
    re, im, _ = kernels.eta_sum(s.real, s.imag, n)
    return complex(re, im)


def _zeta_laurent(s: complex) -> complex:
    h = s - 1.0
    acc = 0j
    for n in range(len(_STIELTJES) - 1, -1, -1):
        acc = acc * h / (n + 1) + (-1) ** n * _STIELTJES[n]
    return 1.0 / h + acc


def zeta(s: complex, config: SeriesConfig = DEFAULT_CONFIG) -> complex:
    """Riemann zeta at ``s``.

    ``Re s >= 0`` uses ``eta(s) / (1 - 2^(1-s))`` with Borwein acceleration;
    ``Re s < 0`` goes through the functional equation. Where the eta
    denominator nearly vanishes, the Laurent expansion (near s = 1) or the
    functional equation (elsewhere) takes over.
    """
    s = complex(s)
    if s == 1:
        raise PoleError("zeta has a pole at s = 1")
    if s.real < 0.0:
        c = chi(s)
        if c == 0:
            return 0j
        return c * zeta(1.0 - s, config)
    den = 1.0 - 2.0 ** (1.0 - s)
    if abs(den) < _DENOMINATOR_GUARD:
        if abs(s - 1.0) < 1.0:
            return _zeta_laurent(s)
        w = 1.0 - s
        return chi(s) * _eta(w, config) / (1.0 - 2.0 ** (1.0 - w))
    return _eta(s, config) / den


def rs_theta(t: float) -> float:
    """Asymptotic Riemann-Siegel theta, accurate to ~1e-12 for t >= 10."""
    if t < 2.0:
        raise DomainError(f"asymptotic theta requires t >= 2, got {t}")
    r = 1.0 / t
    r2 = r * r
    tail = r * (1.0 / 48.0 + r2 * (7.0 / 5760.0 + r2 * (31.0 / 80640.0 + r2 * (127.0 / 430080.0 + r2 * 511.0 / 1216512.0))))
    return 0.5 * t * math.log(t / (2.0 * math.pi)) - 0.5 * t - math.pi / 8.0 + tail


def theta(t: float) -> float:
    """Riemann-Siegel theta from log-gamma, continuous with theta(0) = 0."""
    return log_gamma(complex(0.25, 0.5 * t)).imag - 0.5 * t * _LOG_PI


def hardy_z(t: float, config: SeriesConfig = DEFAULT_CONFIG) -> float:
    """Hardy's Z(t) = exp(i theta(t)) zeta(1/2 + i t), real for real t."""
    if t < 2.0:
        raise DomainError(f"hardy_z requires t >= 2, got {t}")
    w = cmath.exp(1j * theta(t)) * zeta(complex(0.5, t), config)
    if abs(w.imag) > 100.0 * config.eps:
        raise AccuracyError(f"Z({t}) has imaginary residue {w.imag:.3g}")
    return w.real


@dataclass(frozen=True)
class ZeroRecord:
    t: float
    bracket_width: float
    z_residual: float


def _bisect(a: float, b: float, za: float, config: SeriesConfig) -> ZeroRecord:
    neg_a = za < 0.0
    while b - a > _BISECT_WIDTH:
        m = 0.5 * (a + b)
        if m <= a or m >= b:
            break
        zm = hardy_z(m, config)
        if (zm < 0.0) == neg_a:
            a = m
        else:
            b = m
    m = 0.5 * (a + b)
    return ZeroRecord(m, b - a, abs(hardy_z(m, config)))


def find_zeros(
    t_lo: float, t_hi: float, config: SeriesConfig = DEFAULT_CONFIG, workers: int = 1
) -> list[ZeroRecord]:
    """Zeros of zeta on the critical line with ordinate in ``[t_lo, t_hi]``.

    Z(t) is scanned at step 0.05 and every sign change is bisected down to a
    1e-9 bracket. Zeros closer together than the scan step can hide; a
    :class:`CloseZerosWarning` flags grid points where |Z| < 1e-3 without a
    neighbouring sign change.
    """
    if not (2.0 <= t_lo < t_hi <= 120.0):
        raise DomainError(f"need 2 <= t_lo < t_hi <= 120, got [{t_lo}, {t_hi}]")
    n = math.ceil((t_hi - t_lo) / _SCAN_STEP - 1e-9)
    grid = [min(t_lo + i * _SCAN_STEP, t_hi) for i in range(n + 1)]
    grid[-1] = t_hi
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(lambda x: hardy_z(x, config), grid))
    else:
        values = [hardy_z(x, config) for x in grid]

    neg = [v < 0.0 for v in values]
    changes = [neg[i] != neg[i + 1] for i in range(n)]
    for i, v in enumerate(values):
        near_change = (i > 0 and changes[i - 1]) or (i < n and changes[i])
        if abs(v) < _CLOSE_ZERO_LEVEL and not near_change:
            warnings.warn(
                f"|Z({grid[i]:.4f})| = {abs(v):.2e} without a sign change; "
                "two zeros may be closer than the scan step",
                CloseZerosWarning,
                stacklevel=2,
            )
    return [_bisect(grid[i], grid[i + 1], values[i], config) for i in range(n) if changes[i]]


def nearest_zero(t: float, radius: float = 1.0, config: SeriesConfig = DEFAULT_CONFIG):
    """Closest zero ordinate to ``|t|`` within ``radius``, or ``None``."""
    at = abs(t)
    lo = max(2.0, at - radius)
    hi = min(120.0, at + radius)
    if lo >= hi:
        return None
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", CloseZerosWarning)
        zeros = find_zeros(lo, hi, config)
    if not zeros:
        return None
    return min(zeros, key=lambda z: abs(z.t - at))
