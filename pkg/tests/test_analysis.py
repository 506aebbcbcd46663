"""Spectrum container, bandwidth, log-log fit, and the bifurcation sweep."""

import math

import pytest

from compspectrum import (
    CompressionSpectrum,
    InsufficientDataError,
    InvalidInputError,
    bandwidth,
    bifurcation_sweep,
    loglog_fit,
)


class TestSpectrumContainer:
    def test_rejects_cr_of_one(self):
        with pytest.raises(InvalidInputError):
            CompressionSpectrum({2: 1.0}, 10)

    def test_rejects_scale_out_of_range(self):
        with pytest.raises(InvalidInputError):
            CompressionSpectrum({1: 2.0}, 10)
        with pytest.raises(InvalidInputError):
            CompressionSpectrum({11: 2.0}, 10)

    def test_orders_points_by_scale(self):
        spec = CompressionSpectrum({5: 1.5, 2: 2.0, 3: 1.25}, 10)
        assert spec.scales() == [2, 3, 5]

    def test_total_log2(self):
        spec = CompressionSpectrum({2: 2.0, 4: 2.0}, 16)
        assert spec.total_log2() == pytest.approx(2.0)

    def test_empty_spectrum_is_valid(self):
        assert len(CompressionSpectrum({}, 5)) == 0


class TestBandwidth:
    def test_worked_example(self):
        assert bandwidth(CompressionSpectrum({2: 10 / 7, 3: 7 / 4}, 10)) == 2

    def test_empty(self):
        assert bandwidth(CompressionSpectrum({}, 10)) == 0


class TestLogLogFit:
    def test_exact_power_law(self):
        spec = CompressionSpectrum({2: 8.0, 4: 4.0, 8: 2.0}, 4000)
        fit = loglog_fit(spec)
        assert fit.slope == pytest.approx(-1.0, abs=1e-12)
        assert fit.intercept == pytest.approx(4.0, abs=1e-12)
        assert fit.r_squared == pytest.approx(1.0, abs=1e-12)
        assert fit.n_points == 3

    def test_single_point_rejected(self):
        with pytest.raises(InsufficientDataError):
            loglog_fit(CompressionSpectrum({2: 2.0}, 10))

    def test_slope_invariant_under_cr_rescaling(self):
        pts = {2: 3.0, 4: 2.2, 8: 1.7, 16: 1.3}
        base = loglog_fit(CompressionSpectrum(pts, 100))
        c = 4.0
        scaled = loglog_fit(
            CompressionSpectrum({s: cr * c for s, cr in pts.items()}, 100)
        )
        assert scaled.slope == pytest.approx(base.slope, rel=1e-9)
        assert scaled.intercept == pytest.approx(base.intercept + math.log2(c), rel=1e-9)


class TestSweep:
    def test_grid_count_and_order(self):
        rows = bifurcation_sweep(2.9, 4.0, 0.01, length=64, bins=4,
                                 transient=50, lyapunov_n=10)
        assert len(rows) == 111
        assert rows[0].a == 2.9
        assert rows[-1].a == 4.0
        assert [r.a for r in rows] == sorted(r.a for r in rows)

    def test_rows_are_deterministic(self):
        a = bifurcation_sweep(3.5, 3.6, 0.05, length=256, bins=8,
                              transient=200, lyapunov_n=500)
        b = bifurcation_sweep(3.5, 3.6, 0.05, length=256, bins=8,
                              transient=200, lyapunov_n=500)
        assert a == b

    def test_bandwidth_bounded_by_length(self):
        rows = bifurcation_sweep(3.9, 4.0, 0.05, length=128, bins=8,
                                 transient=100, lyapunov_n=100)
        assert all(0 <= r.bandwidth <= 127 for r in rows)

    def test_bad_grid_rejected(self):
        with pytest.raises(InvalidInputError):
            bifurcation_sweep(4.0, 2.9, 0.01)
        with pytest.raises(InvalidInputError):
            bifurcation_sweep(2.9, 4.0, 0.0)
