"""Complex and angle primitives used by every other module.

Complex quantities are plain Python ``complex`` values. Angles are radians
and the principal argument lives in (-pi, pi].
"""

from __future__ import annotations

import cmath
import math
import warnings
from typing import Iterable, NamedTuple, Sequence

from .errors import DomainError, SummationOverflowWarning

TWO_PI = 2.0 * math.pi
HALF_PI = 0.5 * math.pi


class Polar(NamedTuple):
    rho: float
    phi: float


def _check_finite(z: complex) -> None:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite complex argument {z!r}")


def complex_log(z: complex) -> complex:
    """Principal logarithm ``ln|z| + i Arg z`` with ``Arg z`` in (-pi, pi]."""
    z = complex(z)
    _check_finite(z)
    if z == 0:
        raise DomainError("logarithm of zero")
    # cmath.phase returns -pi on the negative real axis when imag is -0.0
    arg = math.atan2(z.imag, z.real)
    if arg == -math.pi:
        arg = math.pi
    return complex(math.log(abs(z)), arg)


def to_polar(z: complex) -> Polar:
    z = complex(z)
    _check_finite(z)
    if z == 0:
        return Polar(0.0, 0.0)
    arg = math.atan2(z.imag, z.real)
    if arg == -math.pi:
        arg = math.pi
    return Polar(abs(z), arg)


def from_polar(p: Polar) -> complex:
    return cmath.rect(p.rho, p.phi)


def normalize_mod(angle: float, modulus: float) -> float:
    """Reduce ``angle`` into ``[0, modulus)``.

    >>> round(math.degrees(normalize_mod(math.radians(-80.95), math.pi / 2)), 10)
    9.05
    """
    if not modulus > 0:
        raise DomainError(f"modulus must be positive, got {modulus}")
    if not math.isfinite(angle):
        raise DomainError(f"non-finite angle {angle}")
    r = math.fmod(angle, modulus)
    if r < 0.0:
        r += modulus
        # a tiny negative remainder rounds up to the modulus itself
        if r >= modulus:
            r = 0.0
    return r


def principal_angle(angle: float, period: float = TWO_PI) -> float:
    """Representative of ``angle`` modulo ``period`` in ``(-period/2, period/2]``.

    Odd in ``angle`` bit for bit, apart from the endpoint ``period/2``.
    """
    half = 0.5 * period
    if angle < 0.0:
        r = -principal_angle(-angle, period)
        return half if r == -half else r
    return half - normalize_mod(half - angle, period)


def circle_distance(a: float, b: float, period: float) -> float:
    """Shortest distance between ``a`` and ``b`` on a circle of circumference ``period``."""
    d = normalize_mod(a - b, period)
    return min(d, period - d)


def compensated_sum(terms: Iterable[float]) -> float:
    """Sum ``terms`` with error-free accumulation (``math.fsum``).

    If the true sum of finite terms overflows the result is ``+/-inf`` and a
    :class:`SummationOverflowWarning` is issued.
    """
    terms = list(terms)
    try:
        total = math.fsum(terms)
    except OverflowError:
        # fsum refuses on intermediate overflow; plain summation yields the signed infinity
        warnings.warn("compensated sum overflowed", SummationOverflowWarning, stacklevel=2)
        return sum(terms)
    if math.isinf(total) and all(math.isfinite(t) for t in terms):
        warnings.warn("compensated sum overflowed", SummationOverflowWarning, stacklevel=2)
    return total


def unwrap_phase(angles: Sequence[float]) -> list[float]:
    """Shift each angle by a multiple of 2*pi so successive jumps are at most pi."""
    if len(angles) == 0:
        raise DomainError("unwrap_phase needs at least one angle")
    out = [float(angles[0])]
    for a in angles[1:]:
        prev = out[-1]
        n = round((prev - a) / TWO_PI)
        out.append(a + TWO_PI * n)
    return out


def _log_trig_scaled(a: float, b: float, y: float) -> complex:
    # log((e^|y| / 2) * (a*(1 + e^-2|y|) + i*sign(y)*b*(1 - e^-2|y|)))
    ay = abs(y)
    e = math.exp(-2.0 * ay)
    w = complex(a * (1.0 + e), math.copysign(1.0, y) * b * -math.expm1(-2.0 * ay))
    if w == 0:
        raise DomainError("logarithm of a trigonometric zero")
    return complex(ay - math.log(2.0), 0.0) + complex_log(w)


def log_cos(z: complex) -> complex:
    """A logarithm of ``cos z`` that does not overflow for large ``|Im z|``."""
    z = complex(z)
    _check_finite(z)
    x, y = z.real, z.imag
    # cos(x + iy) = cos x cosh y - i sin x sinh y
    return _log_trig_scaled(math.cos(x), -math.sin(x), y)


def log_sin(z: complex) -> complex:
    """A logarithm of ``sin z`` that does not overflow for large ``|Im z|``."""
    z = complex(z)
    _check_finite(z)
    x, y = z.real, z.imag
    # sin(x + iy) = sin x cosh y + i cos x sinh y
    return _log_trig_scaled(math.sin(x), math.cos(x), y)


def log_cosh(x: float) -> float:
    """``ln cosh x`` for real ``x``, safe far beyond the overflow point of ``cosh``."""
    ax = abs(x)
    return ax + math.log1p(math.exp(-2.0 * ax)) - math.log(2.0)
