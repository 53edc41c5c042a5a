"""Log-gamma on the complex plane and the Weierstrass product for 1/Gamma."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import kernels
from ._pykernels import _log1p_minus
from .config import DEFAULT_CONFIG, EPS_MACHINE, ROUNDING_SAFETY, SeriesConfig
from .core_math import complex_log, log_sin
from .errors import ConvergenceError, PoleError

# Frozen from the harmonic-number oracle in tests/test_gamma.py
EULER_GAMMA = 0.5772156649015329

_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_LOG_PI = math.log(math.pi)

# B_2m / (2m (2m - 1)) for m = 1..10
_STIRLING = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
]
_SHIFT_THRESHOLD = 10.0


def euler_gamma() -> float:
    """The Euler-Mascheroni constant."""
    return EULER_GAMMA


def _is_nonpositive_integer(s: complex) -> bool:
    return s.imag == 0.0 and s.real <= 0.0 and s.real == math.floor(s.real)


def _stirling(z: complex) -> complex:
    w = 1.0 / z
    w2 = w * w
    acc = 0j
    for c in reversed(_STIRLING):
        acc = acc * w2 + c
    return (z - 0.5) * cmath.log(z) - z + _HALF_LOG_2PI + acc * w


def log_gamma(s: complex) -> complex:
    """A logarithm of Gamma(s).

    On ``Re s >= 0`` this is the branch continuous in the half-plane and real
    on the positive axis. For ``Re s < 0`` the reflection formula is used and
    only ``exp(log_gamma(s)) == Gamma(s)`` is guaranteed.
    """
    s = complex(s)
    if _is_nonpositive_integer(s):
        raise PoleError(f"Gamma has a pole at {s.real:g}")
    if s.real < 0.0:
        return complex(_LOG_PI, 0.0) - log_sin(math.pi * s) - log_gamma(1.0 - s)
    n_shift = max(0, math.ceil(_SHIFT_THRESHOLD - s.real))
    shift = 0j
    for j in range(n_shift):
        shift += cmath.log(s + j)
    return _stirling(s + n_shift) - shift


@dataclass(frozen=True)
class WeierstrassPartial:
    value: complex
    terms_used: int
    tail_estimate: float


def _weierstrass_tail(s: complex, n_terms: int, corrected: bool):
    """Tail added to ``sum_{k<K} h(k)`` and a bound on what remains, for h = log(1 + s/k) - s/k."""
    k = float(n_terms)
    a = abs(s)
    hr, hi = _log1p_minus(s.real / k, s.imag / k)
    h_k = complex(hr, hi)
    if not corrected:
        # |h(k)| <= |s|^2 / (2k(k - |s|)) summed by the integral test
        if k <= a:
            return h_k, math.inf
        return h_k, 0.5 * a * math.log(k / (k - a))
    # integral_K^inf h = s - (K + s) log(1 + s/K), rewritten without cancellation
    integral = -s * s / k - (k + s) * h_k
    d1 = s * s / (k * k * (k + s))
    correction = 0.5 * h_k + integral - d1 / 12.0
    if k <= 2.0 * a:
        return correction, math.inf
    km = k - a
    rem = a * a * (6.0 / (k**4 * km) + 4.0 / (k**3 * km**2) + 2.0 / (k**2 * km**3)) / 720.0
    return correction, rem


def weierstrass_log_recip_gamma(
    s: complex, config: SeriesConfig = DEFAULT_CONFIG, n_terms: int | None = None
) -> WeierstrassPartial:
    """Truncated Weierstrass series ``log s + gamma*s + sum_k [log(1 + s/k) - s/k]``.

    ``exp(-value)`` approximates Gamma(s). With ``n_terms`` the truncation is
    fixed and no convergence check is made; otherwise the number of terms is
    doubled until the tail bound (plus a rounding floor) meets ``config.eps``.
    """
    s = complex(s)
    if s == 0 or _is_nonpositive_integer(s):
        raise PoleError(f"1/Gamma series undefined at {s!r}")
    corrected = config.tail_correction
    lead = complex_log(s) + EULER_GAMMA * s
    if n_terms is None:
        k = max(16, 2 * math.ceil(abs(s)) + 16)
        while True:
            _, bound = _weierstrass_tail(s, k, corrected)
            if bound <= 0.5 * config.eps:
                break
            k *= 2
            if k > config.k_max:
                raise ConvergenceError(
                    f"Weierstrass series at s={s!r} needs more than k_max={config.k_max} terms"
                )
    else:
        k = int(n_terms)
    tail, bound = _weierstrass_tail(s, k, corrected)
    sr, si, mag = kernels.weierstrass_sum(s.real, s.imag, k)
    value = lead + complex(sr, si) + tail
    floor = ROUNDING_SAFETY * EPS_MACHINE * (mag + abs(lead) + abs(tail) + abs(value))
    estimate = bound + floor
    if n_terms is None and estimate > config.eps:
        raise ConvergenceError(
            f"rounding floor {floor:.3g} at s={s!r} exceeds eps={config.eps:g}"
        )
    return WeierstrassPartial(value, k, estimate)
