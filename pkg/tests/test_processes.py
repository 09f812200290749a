"""Tests for the grid-observed path sampler."""

import numpy as np
import pytest
from scipy import stats

import gpctest as g


class TestGridSpec:
    def test_equidistant(self):
        grid = g.GridSpec.equidistant(5)
        assert grid.d == 5
        assert grid.points[0] == 0.0 and grid.points[-1] == 1.0

    def test_validation(self):
        with pytest.raises(ValueError):
            g.GridSpec(np.array([0.0, 0.5]))          # missing endpoint 1
        with pytest.raises(ValueError):
            g.GridSpec(np.array([0.1, 1.0]))          # missing endpoint 0
        with pytest.raises(ValueError):
            g.GridSpec(np.array([0.0, 0.5, 0.5, 1.0]))
        with pytest.raises(ValueError):
            g.GridSpec.equidistant(1)


class TestSamplePath:
    def test_nonpositive(self):
        sample = g.sample_pareto_process(1000, 0.3, g.GridSpec.equidistant(20), 5)
        assert sample.values.shape == (1000, 20)
        assert np.all(sample.values <= 0.0)
        assert np.all(np.isfinite(sample.values))

    def test_margin_identical_across_grid(self):
        sample = g.sample_pareto_process(10 ** 5, 0.0, g.GridSpec.equidistant(9), 8)
        cols = sample.values
        # pairwise two-sample KS across a handful of interior/end columns
        crit = 1.63 * np.sqrt(2.0 / 10 ** 5)
        picks = [0, 2, 4, 6, 8]
        for a in range(len(picks)):
            for b in range(a + 1, len(picks)):
                d = stats.ks_2samp(cols[:, picks[a]], cols[:, picks[b]]).statistic
                assert d < crit

    def test_endpoint_margin_matches_analytic(self):
        lam = 0.0
        sample = g.sample_pareto_process(10 ** 5, lam, g.GridSpec.equidistant(4), 9)
        d = stats.kstest(sample.values[:, 0],
                         lambda x: g.process_margin_cdf(x, lam)).statistic
        assert d < 1.63 / np.sqrt(10 ** 5)

    def test_deterministic(self):
        grid = g.GridSpec.equidistant(6)
        a = g.sample_pareto_process(50, 0.2, grid, 77).values
        b = g.sample_pareto_process(50, 0.2, grid, 77).values
        assert np.array_equal(a, b)


class TestMarginCdf:
    def test_at_zero(self):
        assert g.process_margin_cdf(0.0, 0.3) == 1.0

    def test_branch_value(self):
        # x = -1/2 maps to the margin branch point
        assert g.process_margin_cdf(-0.5, 0.0) == 0.5

    def test_positive_rejected(self):
        with pytest.raises(ValueError):
            g.process_margin_cdf(0.5, 0.0)

    def test_monte_carlo_oracle(self):
        # empirical df of one column at 20 quantiles, 1e6 paths, lam = 0
        lam = 0.0
        sample = g.sample_pareto_process(10 ** 6, lam, g.GridSpec.equidistant(3), 10)
        col = np.sort(sample.values[:, 1])
        qs = np.linspace(0.04, 0.96, 20)
        xs = col[(qs * col.size).astype(int)]
        emp = np.searchsorted(col, xs, side="right") / col.size
        assert np.max(np.abs(emp - g.process_margin_cdf(xs, lam))) < 3e-3


class TestGridMaximum:
    def test_excursion_probability(self):
        # grid max of the copula values: P(M > 1-c) = c m with m in [1, 2];
        # endpoints dominate the two envelopes, so m = 4/3 here exactly
        c = 0.05
        sample = g.sample_pareto_process(10 ** 5, 0.0, g.GridSpec.equidistant(50), 12)
        u = g.process_margin_cdf(sample.values, 0.0)
        p_hat = np.mean(u.max(axis=1) > 1.0 - c)
        target = c * 4.0 / 3.0
        se = np.sqrt(target * (1.0 - target) / 10 ** 5)
        assert abs(p_hat - target) < 3.0 * se
        assert c * 1.0 - 3 * se <= p_hat <= c * 2.0 + 3 * se
