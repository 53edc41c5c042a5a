"""Pure-Python implementations of the hot summation loops.

These mirror ``_ckernels.pyx`` term for term. Sums go through ``math.fsum``.
Every kernel returns the sum together with the sum of the magnitudes of the
pieces that were combined, which callers turn into a rounding-error floor.
"""

import math

NAME = "python"

# x - atan(x) = sum_{j>=1} (-1)^(j+1) x^(2j+1) / (2j+1), used for |x| < 0.1
_ATAN_SERIES = [(-1.0) ** (j + 1) / (2 * j + 1) for j in range(1, 9)]
# y - log1p(y) = sum_{j>=2} (-1)^j y^j / j, used for |y| < 0.1
_LOG_SERIES = [(-1.0) ** j / j for j in range(2, 19)]
_SMALL = 0.1


def x_minus_atan(x):
    if abs(x) < _SMALL:
        x2 = x * x
        acc = 0.0
        for c in reversed(_ATAN_SERIES):
            acc = acc * x2 + c
        return acc * x2 * x
    return x - math.atan(x)


def y_minus_log1p(y):
    if abs(y) < _SMALL:
        acc = 0.0
        for c in reversed(_LOG_SERIES):
            acc = acc * y + c
        return acc * y * y
    return y - math.log1p(y)


def phase_sum(t, n_terms):
    """Sum of ``atan(t/(k+1/2)) - t/k`` for ``k = 1 .. n_terms - 1``."""
    terms = []
    mag = 0.0
    for k in range(1, n_terms):
        u = k + 0.5
        a = t / (2.0 * k * u)          # t/k - t/u
        b = x_minus_atan(t / u)        # t/u - atan(t/u)
        terms.append(-a)
        terms.append(-b)
        mag += abs(a) + abs(b)
    return math.fsum(terms), mag


def identity_sum(t, n_terms):
    """Sum of ``log1p(1/k + 1/(4k^2) + t^2/k^2) - 1/k`` for ``k = 1 .. n_terms - 1``."""
    c = 0.25 + t * t
    terms = []
    mag = 0.0
    for k in range(1, n_terms):
        kk = float(k) * k
        y = (k + c) / kk
        if y < _SMALL:
            a = c / kk                 # y - 1/k
            b = y_minus_log1p(y)
        else:
            a = math.log1p(y)
            b = 1.0 / k
        terms.append(a)
        terms.append(-b)
        mag += a + abs(b)
    return math.fsum(terms), mag


def _log1p_minus(wr, wi):
    """``log(1 + w) - w`` for complex ``w = wr + i wi`` without cancellation."""
    if wr * wr + wi * wi < _SMALL * _SMALL:
        w = complex(wr, wi)
        acc = 0j
        for c in reversed(_LOG_SERIES):
            acc = acc * w + c
        r = -acc * w * w
        return r.real, r.imag
    re = 0.5 * math.log1p(2.0 * wr + wr * wr + wi * wi)
    im = math.atan2(wi, 1.0 + wr)
    return re - wr, im - wi


def weierstrass_sum(s_re, s_im, n_terms):
    """Sum of ``log(1 + s/k) - s/k`` for ``k = 1 .. n_terms - 1``."""
    re_terms = []
    im_terms = []
    mag = 0.0
    for k in range(1, n_terms):
        hr, hi = _log1p_minus(s_re / k, s_im / k)
        re_terms.append(hr)
        im_terms.append(hi)
        mag += abs(hr) + abs(hi)
    return math.fsum(re_terms), math.fsum(im_terms), mag


def eta_weights(n):
    """Borwein weights ``(d_n - d_k) / d_n`` for ``k = 0 .. n-1``."""
    d = []
    term = 1.0
    acc = 0.0
    for i in range(n + 1):
        acc += term
        d.append(acc)
        term *= 4.0 * (n + i) * (n - i) / ((2.0 * i + 1.0) * (2.0 * i + 2.0))
    dn = d[n]
    return [(dn - d[k]) / dn for k in range(n)], dn


def eta_sum(s_re, s_im, n):
    """Borwein-accelerated Dirichlet eta ``sum (-1)^k (k+1)^-s`` with ``n`` terms."""
    weights, _ = eta_weights(n)
    re_terms = []
    im_terms = []
    mag = 0.0
    for k in range(n):
        lk = math.log(k + 1.0)
        amp = weights[k] * math.exp(-s_re * lk)
        if k & 1:
            amp = -amp
        ang = s_im * lk
        re_terms.append(amp * math.cos(ang))
        im_terms.append(-amp * math.sin(ang))
        mag += abs(amp)
    return math.fsum(re_terms), math.fsum(im_terms), mag
