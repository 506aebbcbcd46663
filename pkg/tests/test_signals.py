"""Generators and the logistic-map Lyapunov exponent."""

import math

import numpy as np
import pytest
from scipy.stats import linregress

from compspectrum import (
    InvalidInputError,
    gen_logistic,
    gen_pink,
    gen_repeating,
    gen_sinusoid,
    gen_uniform,
    lyapunov_logistic,
)


class TestRepeating:
    def test_full_repetitions(self):
        y = gen_repeating([1, 2, 3, 4, 5, 6, 7, 8], 2000)
        assert y.shape == (2000,)
        assert np.array_equal(y.reshape(250, 8), np.tile(np.arange(1, 9), (250, 1)))

    def test_single_element_pattern(self):
        assert gen_repeating([7], 3).tolist() == [7, 7, 7]

    def test_partial_final_cycle(self):
        assert gen_repeating([1, 2], 5).tolist() == [1, 2, 1, 2, 1]

    def test_empty_pattern_rejected(self):
        with pytest.raises(InvalidInputError):
            gen_repeating([], 5)


class TestSinusoid:
    def test_fundamental_period_twenty(self):
        y = gen_sinusoid(50, 1000, 2000)
        assert np.array_equal(y[:100], y[20:120])
        assert not np.array_equal(y[:10], y[10:20])

    def test_zero_frequency_is_flat(self):
        assert np.all(gen_sinusoid(0, 1000, 50) == 0)

    def test_quarter_period_sampling(self):
        y = gen_sinusoid(250, 1000, 4, amplitude=2.0)
        assert y[0] == pytest.approx(0, abs=1e-12)
        assert y[1] == pytest.approx(2.0)
        assert y[2] == pytest.approx(0, abs=1e-12)
        assert y[3] == pytest.approx(-2.0)

    def test_exact_periodicity_for_integer_period(self):
        y = gen_sinusoid(125, 1000, 64)
        assert np.array_equal(y[:8], y[8:16])

    def test_nyquist_warning(self):
        with pytest.warns(UserWarning):
            gen_sinusoid(600, 1000, 16)

    def test_bad_rate_rejected(self):
        with pytest.raises(InvalidInputError):
            gen_sinusoid(50, 0, 10)


class TestLogistic:
    def test_superstable_fixed_point(self):
        y = gen_logistic(2.0, 10, x0=0.3, transient=500)
        assert np.allclose(y, 0.5)

    def test_period_two_orbit(self):
        y = gen_logistic(3.2, 10, x0=0.1, transient=1000)
        lo, hi = sorted(set(np.round(y, 6)))
        assert lo == pytest.approx(0.513045, abs=1e-4)
        assert hi == pytest.approx(0.799455, abs=1e-4)
        assert np.allclose(y[::2], y[0]) and np.allclose(y[1::2], y[1])

    def test_values_stay_in_unit_interval(self):
        y = gen_logistic(4.0, 5000, x0=0.1)
        assert np.all((y >= 0) & (y <= 1))

    def test_bad_parameters_rejected(self):
        with pytest.raises(InvalidInputError):
            gen_logistic(4.5, 10)
        with pytest.raises(InvalidInputError):
            gen_logistic(3.5, 10, x0=0.0)
        with pytest.raises(InvalidInputError):
            gen_logistic(3.5, 0)


class TestUniform:
    def test_deterministic_per_seed(self):
        assert np.array_equal(gen_uniform(100, seed=5), gen_uniform(100, seed=5))
        assert not np.array_equal(gen_uniform(100, seed=5), gen_uniform(100, seed=6))

    def test_mean_near_half(self):
        y = gen_uniform(2000, seed=0)
        assert abs(y.mean() - 0.5) < 0.03

    def test_range(self):
        y = gen_uniform(5000, seed=1)
        assert y.min() >= 0.0 and y.max() < 1.0

    def test_zero_length_rejected(self):
        with pytest.raises(InvalidInputError):
            gen_uniform(0, seed=0)


class TestPink:
    def test_deterministic_per_seed(self):
        assert np.array_equal(gen_pink(256, seed=9), gen_pink(256, seed=9))

    def test_normalization(self):
        y = gen_pink(4096, seed=3)
        assert abs(y.mean()) < 1e-9
        assert abs(y.var() - 1.0) < 1e-9

    def test_periodogram_slope_is_minus_one(self):
        # independent check: fit the output's own periodogram
        y = gen_pink(2**16, seed=12)
        psd = np.abs(np.fft.rfft(y)) ** 2
        f = np.fft.rfftfreq(2**16)
        m = f > 0
        fit = linregress(np.log10(f[m]), np.log10(psd[m]))
        assert fit.slope == pytest.approx(-1.0, abs=0.1)

    def test_too_short_rejected(self):
        with pytest.raises(InvalidInputError):
            gen_pink(1, seed=0)


class TestLyapunov:
    def test_fully_chaotic_value(self):
        lam = lyapunov_logistic(4.0, n=100_000)
        assert lam == pytest.approx(math.log(2), abs=0.01)

    def test_stable_fixed_point_value(self):
        lam = lyapunov_logistic(2.9, n=100_000)
        assert lam == pytest.approx(math.log(0.9), abs=0.01)

    def test_periodic_window_is_negative(self):
        assert lyapunov_logistic(3.2, n=20_000) < 0

    def test_error_shrinks_with_n(self):
        coarse = abs(lyapunov_logistic(4.0, n=500, x0=0.2) - math.log(2))
        fine = abs(lyapunov_logistic(4.0, n=200_000, x0=0.2) - math.log(2))
        assert fine < coarse

    def test_bad_parameters_rejected(self):
        with pytest.raises(InvalidInputError):
            lyapunov_logistic(4.2)
        with pytest.raises(InvalidInputError):
            lyapunov_logistic(4.0, x0=1.0)
        with pytest.raises(InvalidInputError):
            lyapunov_logistic(4.0, n=0)
