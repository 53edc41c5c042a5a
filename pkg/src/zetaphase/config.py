"""Truncation settings shared by every series evaluation."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class SeriesConfig:
    """Target tolerance and hard term cap for truncated series.

    ``tail_correction`` switches the Euler-Maclaurin tail estimate on the
    phase, identity and Weierstrass series; without it the series are summed
    raw and the tail is only bounded, which converges like ``1/K``.
    """

    eps: float = 1e-11
    k_max: int = 2_000_000
    tail_correction: bool = True

    def __post_init__(self):
        if not (0.0 < self.eps <= 1e-6):
            raise DomainError(f"eps must lie in (0, 1e-6], got {self.eps}")
        if int(self.k_max) != self.k_max or self.k_max < 16:
            raise DomainError(f"k_max must be an integer >= 16, got {self.k_max}")


DEFAULT_CONFIG = SeriesConfig()

# unit roundoff-scale constant used for rounding floors
EPS_MACHINE = 2.220446049250313e-16
ROUNDING_SAFETY = 4.0
