# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot summation loops in ``_pykernels``.

Compensation uses Neumaier's variant of Kahan summation. Do not build this
module with -ffast-math: reassociation removes the compensation terms.
"""

from libc.math cimport atan, atan2, log, log1p, exp, cos, sin, fabs
from libc.stdlib cimport malloc, free

NAME = "cython"

cdef double _SMALL = 0.1


cdef struct Acc:
    double s
    double c


cdef inline void acc_add(Acc* a, double x) noexcept nogil:
    cdef double t = a.s + x
    if fabs(a.s) >= fabs(x):
        a.c += (a.s - t) + x
    else:
        a.c += (x - t) + a.s
    a.s = t


cdef inline double x_minus_atan(double x) noexcept nogil:
    cdef double x2, acc
    if fabs(x) < _SMALL:
        x2 = x * x
        acc = -1.0 / 17.0
        acc = acc * x2 + 1.0 / 15.0
        acc = acc * x2 - 1.0 / 13.0
        acc = acc * x2 + 1.0 / 11.0
        acc = acc * x2 - 1.0 / 9.0
        acc = acc * x2 + 1.0 / 7.0
        acc = acc * x2 - 1.0 / 5.0
        acc = acc * x2 + 1.0 / 3.0
        return acc * x2 * x
    return x - atan(x)


cdef inline double y_minus_log1p(double y) noexcept nogil:
    cdef double acc = 0.0
    cdef int j
    if fabs(y) < _SMALL:
        for j in range(18, 1, -1):
            if j & 1:
                acc = acc * y - 1.0 / j
            else:
                acc = acc * y + 1.0 / j
        return acc * y * y
    return y - log1p(y)


def phase_sum(double t, long n_terms):
    cdef Acc acc
    cdef double mag = 0.0, u, a, b
    cdef long k
    acc.s = 0.0
    acc.c = 0.0
    with nogil:
        for k in range(1, n_terms):
            u = k + 0.5
            a = t / (2.0 * k * u)
            b = x_minus_atan(t / u)
            acc_add(&acc, -a)
            acc_add(&acc, -b)
            mag += fabs(a) + fabs(b)
    return acc.s + acc.c, mag


def identity_sum(double t, long n_terms):
    cdef Acc acc
    cdef double mag = 0.0, c = 0.25 + t * t, kk, y, a, b
    cdef long k
    acc.s = 0.0
    acc.c = 0.0
    with nogil:
        for k in range(1, n_terms):
            kk = (<double>k) * k
            y = (k + c) / kk
            if y < _SMALL:
                a = c / kk
                b = y_minus_log1p(y)
            else:
                a = log1p(y)
                b = 1.0 / k
            acc_add(&acc, a)
            acc_add(&acc, -b)
            mag += a + fabs(b)
    return acc.s + acc.c, mag


cdef inline void log1p_minus(double wr, double wi, double* hr, double* hi) noexcept nogil:
    # log(1 + w) - w; series branch evaluated in real arithmetic
    cdef double pr, pi_, ar, ai, tr, c
    cdef int j
    if wr * wr + wi * wi < _SMALL * _SMALL:
        ar = 0.0
        ai = 0.0
        for j in range(18, 1, -1):
            c = 1.0 / j if (j & 1) == 0 else -1.0 / j
            tr = ar * wr - ai * wi + c
            ai = ar * wi + ai * wr
            ar = tr
        # acc * w * w
        pr = wr * wr - wi * wi
        pi_ = 2.0 * wr * wi
        hr[0] = -(ar * pr - ai * pi_)
        hi[0] = -(ar * pi_ + ai * pr)
        return
    hr[0] = 0.5 * log1p(2.0 * wr + wr * wr + wi * wi) - wr
    hi[0] = atan2(wi, 1.0 + wr) - wi


def weierstrass_sum(double s_re, double s_im, long n_terms):
    cdef Acc acc_r, acc_i
    cdef double mag = 0.0, hr = 0.0, hi = 0.0
    cdef long k
    acc_r.s = 0.0
    acc_r.c = 0.0
    acc_i.s = 0.0
    acc_i.c = 0.0
    with nogil:
        for k in range(1, n_terms):
            log1p_minus(s_re / k, s_im / k, &hr, &hi)
            acc_add(&acc_r, hr)
            acc_add(&acc_i, hi)
            mag += fabs(hr) + fabs(hi)
    return acc_r.s + acc_r.c, acc_i.s + acc_i.c, mag


def eta_sum(double s_re, double s_im, long n):
    cdef double* d = <double*> malloc((n + 1) * sizeof(double))
    if d == NULL:
        raise MemoryError()
    cdef Acc acc_r, acc_i
    cdef double term = 1.0, run = 0.0, dn, lk, amp, ang, mag = 0.0
    cdef long i, k
    acc_r.s = 0.0
    acc_r.c = 0.0
    acc_i.s = 0.0
    acc_i.c = 0.0
    try:
        with nogil:
            for i in range(n + 1):
                run += term
                d[i] = run
                term *= 4.0 * (n + i) * (n - i) / ((2.0 * i + 1.0) * (2.0 * i + 2.0))
            dn = d[n]
            for k in range(n):
                lk = log(k + 1.0)
                amp = (dn - d[k]) / dn * exp(-s_re * lk)
                if k & 1:
                    amp = -amp
                ang = s_im * lk
                acc_add(&acc_r, amp * cos(ang))
                acc_add(&acc_i, -amp * sin(ang))
                mag += fabs(amp)
    finally:
        free(d)
    return acc_r.s + acc_r.c, acc_i.s + acc_i.c, mag
