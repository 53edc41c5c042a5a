import cmath
import math
import random
import warnings

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from zetaphase import SeriesConfig, kernels
from zetaphase.core_math import HALF_PI, circle_distance, normalize_mod
from zetaphase.errors import ConvergenceError, DomainError, NearZeroError, NearZeroWarning
from zetaphase.phase import (
    PhaseResult,
    _identity_tail,
    _phase_tail,
    chi_ratio,
    conjugate_ratio,
    identity_residual,
    offline_deviation_scan,
    phase_from_chi,
    phase_series,
    ratio_argument,
)
from zetaphase.zeta import rs_theta, theta, zeta

FIRST_ZERO = 14.134725141734694
SECOND_ZERO = 21.022039638771555
THIRD_ZERO = 25.010857580145688
DEG = math.pi / 180

# deviations | |zeta(s)/zeta(1-s)| - 1 | at t = 10 from the first verified run,
# each within 3e-14 of a 30-digit mpmath evaluation
GOLDEN_T10 = {0.5: 0.0, 0.52: 0.009242845761039065, 0.6: 0.04536931778817188, 0.8: 0.13006109068394012}
GOLDEN_06_20 = 0.10932485718806928


def mp_phase(t):
    """-theta(t), the continuous phase, from mpmath."""
    return -float(mpmath.siegeltheta(t))


class TestChiRatio:
    def test_half(self):
        assert chi_ratio(0.5) == pytest.approx(1.0, abs=1e-14)

    def test_two(self):
        assert chi_ratio(2) == pytest.approx(-2 * math.pi**2, rel=1e-14)

    def test_on_line(self):
        assert abs(abs(chi_ratio(complex(0.5, 14.134725))) - 1) <= 1e-10

    @pytest.mark.parametrize("s", [0.3 + 5j, 2.5 - 40j, -3.7 + 1j, 0.5 + 700j])
    def test_functional_equation_oracle(self, s):
        with mpmath.workdps(30):
            want = complex(mpmath.zeta(s) / mpmath.zeta(1 - s))
        assert abs(chi_ratio(s) - want) <= 1e-12 * abs(want)


class TestConjugateRatio:
    def test_on_line_unit_modulus(self):
        assert conjugate_ratio(0.5, 10).modulus_deviation <= 1e-10

    def test_on_line_argument(self):
        r = conjugate_ratio(0.5, 25)
        z = zeta(complex(0.5, 25))
        assert circle_distance(ratio_argument(r), 2 * cmath.phase(z), 2 * math.pi) <= 1e-10

    def test_off_line_golden(self):
        r = conjugate_ratio(0.6, 20)
        assert r.modulus_deviation > 1e-3
        assert r.modulus_deviation == pytest.approx(GOLDEN_06_20, abs=1e-12)

    def test_deviation_definition(self):
        r = conjugate_ratio(0.7, 33)
        assert r.modulus_deviation == abs(abs(r.ratio) - 1)
        assert r.s == complex(0.7, 33)

    def test_schwarz_partner_is_unit_everywhere(self):
        for sigma in (0.1, 0.6, 0.9):
            assert conjugate_ratio(sigma, 20, partner="schwarz").modulus_deviation <= 1e-12

    def test_unknown_partner(self):
        with pytest.raises(DomainError):
            conjugate_ratio(0.5, 10, partner="mirror")

    def test_refuses_at_a_zero(self):
        with pytest.raises(NearZeroError) as info:
            conjugate_ratio(0.5, FIRST_ZERO)
        assert info.value.zero_t == pytest.approx(FIRST_ZERO, abs=1e-9)
        assert info.value.distance < 1e-9

    def test_refuses_at_mirrored_zero_below_axis(self):
        with pytest.raises(NearZeroError) as info:
            conjugate_ratio(0.5, -SECOND_ZERO)
        assert info.value.zero_t == pytest.approx(-SECOND_ZERO, abs=1e-9)


class TestPhaseFromChi:
    def test_origin(self):
        r = phase_from_chi(0.0)
        assert r.phi == 0.0 and r.phi_mod == 0.0 and r.tail_estimate == 0.0 and r.terms_used == 0

    def test_first_zero(self):
        assert abs(phase_from_chi(FIRST_ZERO).phi_mod - 9.05 * DEG) <= 0.05 * DEG

    def test_second_zero(self):
        assert abs(phase_from_chi(21.022040).phi_mod - 77.36 * DEG) <= 0.05 * DEG

    @pytest.mark.parametrize("t", [0.3, 7.0, 33.3, 119.0, -45.0])
    def test_equals_minus_theta(self, t):
        r = phase_from_chi(t)
        assert circle_distance(r.phi, mp_phase(t), math.pi) <= 1e-12

    @pytest.mark.parametrize("t", [20, 40, 60, 80, 100])
    def test_theta_cross_check(self, t):
        got = phase_from_chi(t).phi_mod
        assert circle_distance(got, normalize_mod(-rs_theta(t), HALF_PI), HALF_PI) <= 1e-8

    @pytest.mark.parametrize("t0", [FIRST_ZERO, SECOND_ZERO, THIRD_ZERO])
    def test_continuous_through_zeros(self, t0):
        at = phase_from_chi(t0).phi_mod
        for t in (t0 - 1e-4, t0 + 1e-4):
            assert circle_distance(phase_from_chi(t).phi_mod, at, HALF_PI) <= 1e-3

    @given(st.floats(-120, 120))
    @settings(max_examples=50, deadline=None)
    def test_representation_invariants(self, t):
        r = phase_from_chi(t)
        assert -HALF_PI < r.phi <= HALF_PI
        assert 0.0 <= r.phi_mod < HALF_PI
        assert r.phi_mod == normalize_mod(r.phi, HALF_PI)
        continuous = r.phi_mod + r.branch_m * HALF_PI
        assert circle_distance(continuous, -theta(t), math.pi) <= 1e-9


class TestPhaseSeries:
    def test_origin(self):
        r = phase_series(0.0)
        assert r.phi == 0.0 and r.phi_mod == 0.0

    def test_first_zero(self):
        assert abs(phase_series(FIRST_ZERO).phi_mod - 9.05 * DEG) <= 0.05 * DEG

    def test_fifty_matches_closed_form(self):
        assert circle_distance(phase_series(50).phi_mod, phase_from_chi(50).phi_mod, HALF_PI) <= 1e-9

    @pytest.mark.parametrize("t", [0.1, 3.0, 14.134725, 64.0, 120.0])
    def test_continuous_value_is_minus_theta(self, t):
        r = phase_series(t)
        continuous = r.phi_mod + r.branch_m * HALF_PI
        assert continuous == pytest.approx(mp_phase(t), abs=1e-10)

    @pytest.mark.parametrize("t", [0.5, 14.134725, 99.9])
    def test_odd(self, t):
        a, b = phase_series(t), phase_series(-t)
        assert b.phi == -a.phi or (a.phi == HALF_PI and b.phi == HALF_PI)

    @pytest.mark.parametrize("t", [2.5, 40.0, 120.0])
    def test_branch_agrees_with_closed_form(self, t):
        assert phase_series(t).branch_m == phase_from_chi(t).branch_m

    def test_result_contract(self):
        cfg = SeriesConfig(eps=1e-11)
        r = phase_series(30.0, cfg)
        assert isinstance(r, PhaseResult)
        assert r.terms_used >= 6000
        assert 0 < r.tail_estimate <= cfg.eps
        assert r.phi_mod == normalize_mod(r.phi, HALF_PI)

    @given(st.floats(2, 100))
    @settings(max_examples=15, deadline=None)
    def test_agrees_with_closed_form(self, t):
        cfg = SeriesConfig()
        d = circle_distance(phase_series(t, cfg).phi_mod, phase_from_chi(t).phi_mod, HALF_PI)
        assert d <= 10 * cfg.eps

    def test_out_of_envelope(self):
        with pytest.raises(DomainError):
            phase_series(120.5)

    def test_kmax_exhausted(self):
        with pytest.raises(ConvergenceError):
            phase_series(10.0, SeriesConfig(eps=1e-11, k_max=64))

    def test_raw_series_cannot_converge(self):
        with pytest.raises(ConvergenceError):
            phase_series(10.0, SeriesConfig(eps=1e-11, k_max=200_000, tail_correction=False))

    def test_both_backends_agree(self):
        results = []
        for name in kernels.available_backends():
            with kernels.using_backend(name):
                results.append(phase_series(77.7).phi)
        assert max(results) - min(results) <= 1e-13


class TestTails:
    """Closed-form tails against mpmath's own (numerical) Euler-Maclaurin summation."""

    @pytest.mark.parametrize("t,k", [(1.0, 50), (14.0, 400), (100.0, 20000)])
    def test_phase_tail(self, t, k):
        with mpmath.workdps(30):
            f = lambda x: mpmath.atan(t / (x + 0.5)) - t / x
            rest = mpmath.nsum(f, [k, mpmath.inf], method="euler-maclaurin")
        tail, bound = _phase_tail(t, k, True)
        assert abs(tail - float(rest)) <= bound + 1e-16 * abs(tail)

    @pytest.mark.parametrize("t,k", [(0.0, 50), (14.0, 400), (100.0, 20000)])
    def test_identity_tail(self, t, k):
        # brute force to N, then the two leading terms of the remaining sum:
        # g(x) = (c - 1/2)/x^2 + (1/3 - c)/x^3 + O(c^2/x^4), c = 1/4 + t^2
        c = 0.25 + t * t
        n = 400_000 if t < 50 else 2_000_000
        direct = math.fsum(math.log1p((j + c) / (j * j)) - 1.0 / j for j in range(k, n))
        rest = direct + (c - 0.5) / n + (c - 0.5) / (2 * n * n) + (1 / 3 - c) / (2 * n * n)
        tail, bound = _identity_tail(t, k, True)
        assert abs(tail - rest) <= max(bound, 5e-11)


class TestIdentity:
    @pytest.mark.parametrize("t", [0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 14.1347, 21.022, 30.0, 50.0, 100.0])
    def test_vanishes(self, t):
        assert abs(identity_residual(t)) <= 5e-10

    def test_overflow_guard_at_thirty(self):
        with pytest.raises(OverflowError):
            math.cosh(30 * math.pi * 8)
        assert abs(identity_residual(30.0)) <= 50 * 1e-11

    @pytest.mark.parametrize("t", [0.5, 14.1347, 77.0])
    def test_even(self, t):
        assert identity_residual(-t) == identity_residual(t)

    def test_out_of_envelope(self):
        with pytest.raises(DomainError):
            identity_residual(-121.0)


class TestOfflineScan:
    def test_on_line(self):
        (sample,) = offline_deviation_scan(10, [0.5])
        assert sample.modulus_deviation <= 1e-10

    def test_monotone_at_ten(self):
        sigmas = [0.5, 0.52, 0.6, 0.8]
        devs = [s.modulus_deviation for s in offline_deviation_scan(10, sigmas)]
        assert all(a < b for a, b in zip(devs, devs[1:]))
        for sigma, d in zip(sigmas, devs):
            assert d == pytest.approx(GOLDEN_T10[sigma], abs=1e-12)

    def test_golden_against_mpmath(self):
        with mpmath.workdps(30):
            for sigma, d in GOLDEN_T10.items():
                s = mpmath.mpc(sigma, 10)
                assert float(abs(abs(mpmath.zeta(s) / mpmath.zeta(1 - s)) - 1)) == pytest.approx(d, abs=3e-14)

    def test_warns_near_zero(self):
        with pytest.warns(NearZeroWarning):
            offline_deviation_scan(14.1347, [0.6])

    def test_quiet_away_from_zeros(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error", NearZeroWarning)
            offline_deviation_scan(18.0, [0.6])

    def test_order_preserved(self):
        sigmas = [0.8, 0.5, 0.6]
        out = offline_deviation_scan(10, sigmas)
        assert [s.s.real for s in out] == sigmas

    @pytest.mark.parametrize("sigmas,t", [([0.0], 10), ([1.2], 10), ([0.5], 1.0)])
    def test_domain(self, sigmas, t):
        with pytest.raises(DomainError):
            offline_deviation_scan(t, sigmas)


def test_on_line_unit_modulus_random_heights():
    rng = random.Random(404)
    zeros = [float(mpmath.zetazero(i).imag) for i in range(1, 30)]
    checked = 0
    while checked < 25:
        t = rng.uniform(2, 100)
        if min(abs(t - z) for z in zeros) < 0.1:
            continue
        assert conjugate_ratio(0.5, t).modulus_deviation <= 1e-9
        checked += 1
