"""Spectrum math: autocorrelation, A and B factors, full spectrum, grids."""

import time

import numpy as np
import pytest

from fgn_toolkit import (
    BMode,
    HurstParam,
    build_spectrum_grid,
    fgn_autocorrelation,
    fgn_power_spectrum,
    spectrum_b,
    spectrum_factor_a,
)
from fgn_toolkit.spectrum import EXACT, FAST, NEAR_EXACT

# Error-bound evaluation grid: h values by column of the published error
# curves, lambda from 0.01 out to 3.0 in steps of 0.3.
ERROR_GRID_H = (0.5, 0.6, 0.7, 0.8, 0.9)
ERROR_GRID_LAMBDA = np.concatenate([[0.01], np.arange(0.3, 3.01, 0.3)])


class TestHurstParam:
    def test_accepts_interior(self):
        assert HurstParam(0.75).h == 0.75

    @pytest.mark.parametrize("bad", [0.5, 1.0, 0.3, 1.2])
    def test_rejects_boundary_and_outside(self, bad):
        with pytest.raises(ValueError):
            HurstParam(bad)

    def test_permissive_accepts_half(self):
        assert HurstParam.permissive(0.5).h == 0.5

    def test_permissive_still_rejects_below_half(self):
        with pytest.raises(ValueError):
            HurstParam.permissive(0.49)


class TestBMode:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("fast", BMode.truncated_double_prime()),
            ("exact", BMode.partial(200)),
            ("k:3", BMode.truncated(3)),
            ("k:7", BMode.truncated(7)),
            ("partial:200", BMode.partial(200)),
            ("prime", BMode.truncated_prime()),
            ("doubleprime", BMode.truncated_double_prime()),
        ],
    )
    def test_parse(self, text, expected):
        assert BMode.parse(text) == expected

    @pytest.mark.parametrize("mode", [BMode.truncated(5), BMode.partial(123),
                                      BMode.truncated_prime(), BMode.truncated_double_prime()])
    def test_str_roundtrip(self, mode):
        assert BMode.parse(str(mode)) == mode

    @pytest.mark.parametrize("text", ["k:0", "partial:0", "bogus", "k:x"])
    def test_rejects_bad_specs(self, text):
        with pytest.raises(ValueError):
            BMode.parse(text)


class TestAutocorrelation:
    def test_white_noise_uncorrelated(self):
        h = HurstParam.permissive(0.5)
        for k in range(1, 30):
            assert fgn_autocorrelation(h, k) == 0.0

    @pytest.mark.parametrize("hval", [0.51, 0.7, 0.95])
    def test_lag_zero_is_one(self, hval):
        assert fgn_autocorrelation(HurstParam(hval), 0) == 1.0

    def test_lag_one_frozen_value(self):
        # 0.5 * (2**1.4 - 2), checked against high-precision evaluation
        got = fgn_autocorrelation(HurstParam(0.7), 1)
        assert got == pytest.approx(0.3195079107728942, abs=1e-15)

    def test_bounded_by_one(self):
        lags = np.arange(0, 200)
        for hval in (0.55, 0.7, 0.9, 0.99):
            r = fgn_autocorrelation(HurstParam(hval), lags)
            assert np.all(np.abs(r) <= 1.0)

    def test_positive_lags_positive_for_lrd(self):
        r = fgn_autocorrelation(HurstParam(0.8), np.arange(1, 100))
        assert np.all(r > 0)

    def test_rejects_negative_lag(self):
        with pytest.raises(ValueError):
            fgn_autocorrelation(HurstParam(0.7), -1)


class TestFactorA:
    def test_zero_at_zero_frequency(self):
        assert spectrum_factor_a(HurstParam.permissive(0.5), 0.0) == 0.0

    def test_value_at_pi_for_half(self):
        # 2 * sin(pi/2) * Gamma(2) * (1 - cos pi) = 4, exactly representable
        assert spectrum_factor_a(HurstParam.permissive(0.5), np.pi) == 4.0

    def test_frozen_value(self):
        # 2 sin(0.9 pi) Gamma(2.8) * 1, frozen from scipy.special.gamma
        got = spectrum_factor_a(HurstParam(0.9), np.pi / 2)
        assert got == pytest.approx(1.0361282886645082, rel=1e-12)

    def test_nonnegative_on_domain(self):
        lam = np.linspace(-np.pi, np.pi, 101)
        vals = spectrum_factor_a(HurstParam(0.8), lam)
        assert np.all(vals >= 0)

    def test_rejects_outside_pi(self):
        with pytest.raises(ValueError):
            spectrum_factor_a(HurstParam(0.8), 3.2)


def unrolled_six_term_b(lam, h):
    """Independent hand-unrolled k=3 expression used as an oracle."""
    d = -2.0 * h - 1.0
    dp = -2.0 * h
    a1, b1 = 2 * np.pi + lam, 2 * np.pi - lam
    a2, b2 = 4 * np.pi + lam, 4 * np.pi - lam
    a3, b3 = 6 * np.pi + lam, 6 * np.pi - lam
    a4, b4 = 8 * np.pi + lam, 8 * np.pi - lam
    return (
        a1**d + b1**d + a2**d + b2**d + a3**d + b3**d
        + (a3**dp + b3**dp + a4**dp + b4**dp) / (8 * h * np.pi)
    )


class TestSpectrumB:
    def test_truncated3_matches_hand_unrolled(self):
        lam = np.linspace(0.01, np.pi, 53)
        for hval in (0.5, 0.6, 0.75, 0.9, 0.95):
            h = HurstParam.permissive(hval)
            got = spectrum_b(h, lam, BMode.truncated(3))
            want = unrolled_six_term_b(lam, hval)
            assert np.allclose(got, want, rtol=1e-12)

    def test_frozen_example_half_pi(self):
        # direct arithmetic at h = 1/2, lam = pi: d = -2, d' = -1
        want = sum(
            (2 * j * np.pi + np.pi) ** -2 + (2 * j * np.pi - np.pi) ** -2
            for j in (1, 2, 3)
        )
        want += (1 / (7 * np.pi) + 1 / (9 * np.pi) + 1 / (5 * np.pi) + 1 / (7 * np.pi)) / (
            4 * np.pi
        )
        got = spectrum_b(HurstParam.permissive(0.5), np.pi, BMode.truncated(3))
        assert got == pytest.approx(want, rel=1e-12)

    def test_partial_monotone_in_terms_and_below_truncated(self):
        lam = np.linspace(0.05, np.pi, 17)
        for hval in (0.5, 0.7, 0.9):
            h = HurstParam.permissive(hval)
            prev = None
            for n_terms in (10, 100, 200, 1000, 10000):
                cur = spectrum_b(h, lam, BMode.partial(n_terms))
                if prev is not None:
                    assert np.all(cur >= prev)
                prev = cur
            assert np.all(prev < spectrum_b(h, lam, BMode.truncated(3)))

    def test_truncated3_error_bounds(self):
        # overestimates by less than 0.5% relative to the near-exact sum
        for hval in ERROR_GRID_H:
            h = HurstParam.permissive(hval)
            ref = spectrum_b(h, ERROR_GRID_LAMBDA, NEAR_EXACT)
            err = (spectrum_b(h, ERROR_GRID_LAMBDA, BMode.truncated(3)) - ref) / ref
            assert np.all(err > 0)
            assert np.all(err <= 0.005)

    def test_double_prime_error_bound_at_frozen_point(self):
        h = HurstParam.permissive(0.5)
        ref = spectrum_b(h, 3.0, NEAR_EXACT)
        got = spectrum_b(h, 3.0, BMode.truncated_double_prime())
        assert abs(got - ref) / ref <= 7.5e-5

    def test_correction_ordering_max_over_grid(self):
        # worst-case error shrinks with each correction stage
        for hval in ERROR_GRID_H:
            h = HurstParam.permissive(hval)
            ref = spectrum_b(h, ERROR_GRID_LAMBDA, NEAR_EXACT)
            e_k3 = np.abs(spectrum_b(h, ERROR_GRID_LAMBDA, BMode.truncated(3)) - ref).max()
            e_p = np.abs(spectrum_b(h, ERROR_GRID_LAMBDA, BMode.truncated_prime()) - ref).max()
            e_dp = np.abs(
                spectrum_b(h, ERROR_GRID_LAMBDA, BMode.truncated_double_prime()) - ref
            ).max()
            assert e_dp <= e_p <= e_k3

    def test_positive_in_all_modes(self):
        lam = np.linspace(0.001, np.pi, 25)
        for mode in (BMode.truncated(1), BMode.truncated(3), BMode.truncated_prime(),
                     BMode.truncated_double_prime(), BMode.partial(1), EXACT):
            assert np.all(spectrum_b(HurstParam(0.7), lam, mode) > 0)

    @pytest.mark.parametrize("lam", [0.0, -0.1, 3.2])
    def test_rejects_out_of_domain(self, lam):
        with pytest.raises(ValueError):
            spectrum_b(HurstParam(0.7), lam, BMode.truncated(3))


class TestPowerSpectrum:
    def test_finite_positive_near_half(self):
        got = fgn_power_spectrum(HurstParam(0.5 + 1e-9), np.pi / 2, NEAR_EXACT)
        assert np.isfinite(got) and got > 0

    def test_relative_error_of_truncated3_on_f(self):
        for hval in ERROR_GRID_H:
            h = HurstParam.permissive(hval)
            ref = fgn_power_spectrum(h, ERROR_GRID_LAMBDA, NEAR_EXACT)
            err = (fgn_power_spectrum(h, ERROR_GRID_LAMBDA, BMode.truncated(3)) - ref) / ref
            assert np.all(np.abs(err) <= 0.005)

    @pytest.mark.parametrize("hval", [0.6, 0.7, 0.8, 0.9])
    def test_strictly_decreasing_on_coarse_grid(self, hval):
        # fine grids can hit double-precision resolution near pi, so the
        # monotonicity scan uses n = 1024
        grid = build_spectrum_grid(HurstParam(hval), 1024, BMode.truncated(3))
        assert np.all(np.diff(grid.values) < 0)

    def test_minimum_at_pi(self):
        grid = build_spectrum_grid(HurstParam(0.9), 512, BMode.truncated(3))
        assert np.argmin(grid.values) == len(grid) - 1

    def test_rejects_zero_lambda(self):
        with pytest.raises(ValueError):
            fgn_power_spectrum(HurstParam(0.7), 0.0, EXACT)


class TestBuildSpectrumGrid:
    def test_frequencies_for_n8(self):
        grid = build_spectrum_grid(HurstParam(0.7), 8, BMode.truncated(3))
        assert np.array_equal(grid.lambdas, np.array([np.pi / 4, np.pi / 2, 3 * np.pi / 4, np.pi]))

    @pytest.mark.parametrize("n", [0, 7, -4])
    def test_rejects_bad_n(self, n):
        with pytest.raises(ValueError):
            build_spectrum_grid(HurstParam(0.7), n, BMode.truncated(3))

    def test_values_match_pointwise_spectrum(self):
        h = HurstParam(0.8)
        grid = build_spectrum_grid(h, 64, FAST)
        assert np.allclose(grid.values, fgn_power_spectrum(h, grid.lambdas, FAST), rtol=1e-15)

    def test_large_grid_is_fast(self):
        h = HurstParam.permissive(0.5)
        start = time.perf_counter()
        build_spectrum_grid(h, 32768, BMode.truncated(3))
        assert time.perf_counter() - start < 1.0
