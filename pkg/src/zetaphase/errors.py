"""Exception and warning types shared across the package."""


class ZetaPhaseError(Exception):
    """Base class for all errors raised by zetaphase."""


class DomainError(ZetaPhaseError, ValueError):
    """An argument lies outside the domain of the operation."""


class PoleError(DomainError):
    """The function has a pole (or a logarithmic singularity) at the argument."""


class ConvergenceError(ZetaPhaseError, ArithmeticError):
    """A truncated series could not reach the requested tolerance within ``k_max`` terms."""


class AccuracyError(ZetaPhaseError, ArithmeticError):
    """A computed value failed its own accuracy self-check."""


class NearZeroError(ZetaPhaseError, ArithmeticError):
    """A quotient was requested at (or too close to) a zero of its denominator.

    ``zero_t`` is the ordinate of the offending zero and ``distance`` the
    distance from the requested point to it, when known.
    """

    def __init__(self, message, zero_t=None, distance=None):
        super().__init__(message)
        self.zero_t = zero_t
        self.distance = distance


class SummationOverflowWarning(RuntimeWarning):
    """A sum of finite terms overflowed to infinity."""


class NearZeroWarning(RuntimeWarning):
    """An evaluation point sits close to a zero ordinate of zeta."""


class CloseZerosWarning(RuntimeWarning):
    """|Z(t)| dipped close to zero on the scan grid without a sign change."""
