"""Phase of zeta along the critical line without evaluating zeta.

On ``s = 1/2 + it`` the conjugate ratio ``zeta(s) / zeta(conj s)`` has unit
modulus and equals ``chi(s) = exp(2 i phi)``, where ``phi = arg zeta(s)``.
Expanding ``1/Gamma`` as a Weierstrass product turns ``arg chi`` into an
elementary series in ``t``; its real part gives an identity in ``t`` that
must vanish for every ``t``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from . import kernels
from ._pykernels import x_minus_atan, y_minus_log1p
from .config import DEFAULT_CONFIG, EPS_MACHINE, ROUNDING_SAFETY, SeriesConfig
from .core_math import HALF_PI, log_cosh, normalize_mod, principal_angle, to_polar
from .errors import ConvergenceError, DomainError, NearZeroError, NearZeroWarning
from .gamma import EULER_GAMMA
from .zeta import chi, log_chi, nearest_zero, zeta

_LOG_2PI = math.log(2.0 * math.pi)
_LOG_PI_4 = math.log(math.pi / 4.0)
_T_LIMIT = 120.0
_NEAR_ZERO_MODULUS = 1e-9
# |t - t0| below which off-line deviations stop behaving monotonically
OFFLINE_MONOTONE_RADIUS = 0.5


@dataclass(frozen=True)
class PhaseResult:
    """Phase of zeta at ``1/2 + it``.

    ``phi`` is the representative in (-pi/2, pi/2]; ``phi_mod`` is the same
    angle reduced into [0, pi/2); ``branch_m`` counts the quarter turns
    between the continuous phase and ``phi_mod``.
    """

    phi: float
    phi_mod: float
    branch_m: int
    terms_used: int
    tail_estimate: float


@dataclass(frozen=True)
class RatioSample:
    s: complex
    ratio: complex
    modulus_deviation: float


def _phase_result(continuous: float, terms_used: int, tail_estimate: float) -> PhaseResult:
    phi = principal_angle(continuous, math.pi)
    phi_mod = normalize_mod(phi, HALF_PI)
    branch_m = round((continuous - phi_mod) / HALF_PI)
    return PhaseResult(phi, phi_mod, branch_m, terms_used, tail_estimate)


def chi_ratio(s: complex) -> complex:
    """``(2 pi)^s / (2 cos(pi s / 2) Gamma(s))``, evaluated in logarithmic form."""
    return chi(s)


def conjugate_ratio(
    sigma: float, t: float, config: SeriesConfig = DEFAULT_CONFIG, partner: str = "functional"
) -> RatioSample:
    """Ratio of zeta at ``s = sigma + it`` to zeta at its mirror point.

    ``partner="functional"`` (default) divides by ``zeta(1 - s)``, the form
    reached through the functional equation. On the critical line
    ``1 - s = conj(s)``, so this is the conjugate ratio with unit modulus;
    off the line its modulus drifts away from one. ``partner="schwarz"``
    divides by ``zeta(conj s)`` literally, which by reflection has unit
    modulus everywhere.

    Both zeta values are computed independently. Raises
    :class:`NearZeroError` when the denominator has modulus below 1e-9; the
    limit value at a zero is what :func:`phase_from_chi` supplies.
    """
    s = complex(sigma, t)
    if partner == "functional":
        mirror = 1.0 - s
    elif partner == "schwarz":
        mirror = s.conjugate()
    else:
        raise DomainError(f"partner must be 'functional' or 'schwarz', got {partner!r}")
    if s == 1 or mirror == 1:
        raise DomainError("ratio undefined at the pole s = 1")
    num = zeta(s, config)
    den = zeta(mirror, config)
    if abs(den) < _NEAR_ZERO_MODULUS:
        z = nearest_zero(t, config=config) if 2.0 <= abs(t) <= _T_LIMIT else None
        zero_t = math.copysign(z.t, t) if z else None
        dist = math.hypot(sigma - 0.5, abs(t) - z.t) if z else None
        raise NearZeroError(
            f"|zeta({mirror.real:g} {mirror.imag:+g}i)| = {abs(den):.2e}"
            + (f"; nearest zero at t = {zero_t:.9f} (distance {dist:.2e})" if z else ""),
            zero_t=zero_t,
            distance=dist,
        )
    ratio = num / den
    return RatioSample(s, ratio, abs(abs(ratio) - 1.0))


def phase_from_chi(t: float) -> PhaseResult:
    """Phase at ``1/2 + it`` as half the argument of chi (closed form, via log-gamma)."""
    continuous = 0.5 * log_chi(complex(0.5, t)).imag
    return _phase_result(continuous, 0, 0.0)


def _choose_terms(start: int, bound, config: SeriesConfig, what: str) -> int:
    k = min(start, config.k_max)
    while bound(k) > 0.5 * config.eps:
        if k >= config.k_max:
            raise ConvergenceError(
                f"{what}: tail bound {bound(k):.3g} above eps={config.eps:g} at k_max={config.k_max}"
            )
        k = min(2 * k, config.k_max)
    return k


def _default_terms(t: float) -> int:
    return max(5000, 200 * math.ceil(t))


def _phase_tail(t: float, n_terms: int, corrected: bool):
    """Tail for ``sum_{k<K} f(k)``, f(k) = atan(t/(k+1/2)) - t/k, and a bound on the remainder."""
    k = float(n_terms)
    u = k + 0.5
    x = t / u
    f_k = -t / (2.0 * k * u) - x_minus_atan(x)
    # integral_K^inf f, as a convergent difference
    integral = u * x_minus_atan(x) - 0.5 * t * math.log1p((k + 0.25 + t * t) / (k * k))
    if not corrected:
        return f_k, abs(integral)
    d1 = t * (k + 0.25 + t * t) / (k * k * (u * u + t * t))
    return 0.5 * f_k + integral - d1 / 12.0, t / (60.0 * k**4)


def phase_series(t: float, config: SeriesConfig = DEFAULT_CONFIG) -> PhaseResult:
    """Phase at ``1/2 + it`` from the zeta-free elementary series.

    Sums ``(t/2)(gamma + ln 2pi) + atan(2t)/2 - atan(-tanh(pi t/2))/2
    + (1/2) sum_k [atan(t/(k+1/2)) - t/k]`` with an Euler-Maclaurin tail.
    The function is odd in ``t``; negative ``t`` is computed as ``-phase(|t|)``.
    """
    if not abs(t) <= _T_LIMIT:
        raise DomainError(f"phase_series supports |t| <= {_T_LIMIT:g}, got {t}")
    at = abs(t)
    corrected = config.tail_correction
    k = _choose_terms(
        _default_terms(at), lambda n: _phase_tail(at, n, corrected)[1], config, f"phase series at t={t}"
    )
    tail, bound = _phase_tail(at, k, corrected)
    partial, mag = kernels.phase_sum(at, k)
    pieces = [
        0.5 * at * EULER_GAMMA,
        0.5 * at * _LOG_2PI,
        0.5 * math.atan(2.0 * at),
        -0.5 * math.atan(-math.tanh(0.5 * math.pi * at)),
        0.5 * partial,
        0.5 * tail,
    ]
    continuous = math.fsum(pieces)
    floor = ROUNDING_SAFETY * EPS_MACHINE * (0.5 * mag + sum(abs(p) for p in pieces))
    estimate = 0.5 * bound + floor
    if estimate > config.eps:
        raise ConvergenceError(f"phase series at t={t}: error estimate {estimate:.3g} above eps")
    if t < 0:
        continuous = -continuous
    return _phase_result(continuous, k, estimate)


def _identity_tail(t: float, n_terms: int, corrected: bool):
    """Tail for ``sum_{k<K} g(k)``, g(k) = ln(1 + 1/k + 1/(4k^2) + t^2/k^2) - 1/k."""
    k = float(n_terms)
    c = 0.25 + t * t
    u = k + 0.5
    x = t / u
    y = (k + c) / (k * k)
    g_k = c / (k * k) - y_minus_log1p(y)
    # integral_K^inf g = 1 + 2t atan(t/u) - u ln(1 + y), expanded to cancel the O(1) parts
    integral = (
        t * t * (k - 0.5) / (u * k)
        - 0.75 / k
        - c / (2.0 * k * k)
        - 2.0 * t * x_minus_atan(x)
        + u * y_minus_log1p(y)
    )
    if not corrected:
        return g_k, abs(integral) + abs(g_k)
    d1 = (k * (0.5 - 2.0 * t * t) + c) / (k * k * (u * u + t * t))
    return 0.5 * g_k + integral - d1 / 12.0, (t + 1.0) / (60.0 * k**4)


def identity_residual(t: float, config: SeriesConfig = DEFAULT_CONFIG) -> float:
    """Residual of the real-part identity, which is zero for every real ``t``.

    ``R(t) = gamma + ln(pi/4) - ln cosh(pi t) + ln(1 + 4t^2)
    + sum_k ln[exp(-1/k) (1 + 1/k + 1/(4k^2) + t^2/k^2)]``
    """
    if not abs(t) <= _T_LIMIT:
        raise DomainError(f"identity_residual supports |t| <= {_T_LIMIT:g}, got {t}")
    at = abs(t)
    corrected = config.tail_correction
    k = _choose_terms(
        _default_terms(at), lambda n: _identity_tail(at, n, corrected)[1], config, f"identity series at t={t}"
    )
    tail, _ = _identity_tail(at, k, corrected)
    partial, _ = kernels.identity_sum(at, k)
    return math.fsum(
        [EULER_GAMMA, _LOG_PI_4, -log_cosh(math.pi * at), math.log1p(4.0 * at * at), partial, tail]
    )


def offline_deviation_scan(
    t: float, sigmas, config: SeriesConfig = DEFAULT_CONFIG
) -> list[RatioSample]:
    """Conjugate ratios at ``sigma + it`` for each sigma, in input order.

    Off the critical line the ratio leaves the unit circle. Within 0.5 of a
    zero ordinate a :class:`NearZeroWarning` is issued: there the deviation
    is dominated by the nearby zero and need not grow with ``|sigma - 1/2|``.
    """
    if t < 2.0:
        raise DomainError(f"offline_deviation_scan requires t >= 2, got {t}")
    sigmas = [float(x) for x in sigmas]
    for x in sigmas:
        if not 0.0 < x < 1.0:
            raise DomainError(f"sigma must lie in (0, 1), got {x}")
    if t <= _T_LIMIT:
        z = nearest_zero(t, radius=OFFLINE_MONOTONE_RADIUS + 0.1, config=config)
        if z is not None and abs(z.t - t) < OFFLINE_MONOTONE_RADIUS:
            warnings.warn(
                f"t = {t} lies {abs(z.t - t):.2e} from the zero at {z.t:.9f}",
                NearZeroWarning,
                stacklevel=2,
            )
    return [conjugate_ratio(x, t, config) for x in sigmas]


def ratio_argument(sample: RatioSample) -> float:
    return to_polar(sample.ratio).phi
