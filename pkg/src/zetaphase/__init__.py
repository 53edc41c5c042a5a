"""Critical-line phase of the Riemann zeta function from elementary series.

The hot summation loops live in a compiled extension with a pure-Python
fallback; see :mod:`zetaphase.kernels` for which one is active.
"""

from .config import SeriesConfig
from .core_math import (
    compensated_sum,
    complex_log,
    normalize_mod,
    to_polar,
    unwrap_phase,
)
from .errors import (
    AccuracyError,
    ConvergenceError,
    DomainError,
    NearZeroError,
    PoleError,
    ZetaPhaseError,
)
from .gamma import euler_gamma, log_gamma, weierstrass_log_recip_gamma
from .phase import (
    PhaseResult,
    RatioSample,
    chi_ratio,
    conjugate_ratio,
    identity_residual,
    offline_deviation_scan,
    phase_from_chi,
    phase_series,
)
from .zeta import ZeroRecord, find_zeros, hardy_z, rs_theta, zeta

__version__ = "0.1.0"

__all__ = [
    "SeriesConfig",
    "PhaseResult",
    "RatioSample",
    "ZeroRecord",
    "compensated_sum",
    "complex_log",
    "normalize_mod",
    "to_polar",
    "unwrap_phase",
    "euler_gamma",
    "log_gamma",
    "weierstrass_log_recip_gamma",
    "zeta",
    "rs_theta",
    "hardy_z",
    "find_zeros",
    "chi_ratio",
    "conjugate_ratio",
    "phase_from_chi",
    "phase_series",
    "identity_residual",
    "offline_deviation_scan",
    "ZetaPhaseError",
    "DomainError",
    "PoleError",
    "ConvergenceError",
    "AccuracyError",
    "NearZeroError",
]
