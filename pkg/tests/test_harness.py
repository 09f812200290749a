"""Tests for the experiment harness and the CSV/SVG emitters."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

import gpctest as g
from gpctest import harness
from gpctest.harness import ConfigError, ExperimentConfig


class ConstantModel:
    """Stub model producing data with no exceedances; every test degenerates."""

    label = "constant"
    dimension = 2

    def sample(self, n, seed):
        return np.full((n, 2), 0.5)


class TestConfig:
    def test_validation(self):
        model = g.sinelog_model(0.0)
        with pytest.raises(ConfigError):
            ExperimentConfig(model=model, n=0, c=0.2, k=2, replications=1)
        with pytest.raises(ConfigError):
            ExperimentConfig(model=model, n=10, c=1.2, k=2, replications=1)
        with pytest.raises(ConfigError):
            ExperimentConfig(model=model, n=10, c=[0.2, 0.1], k=2, replications=1)
        with pytest.raises(ConfigError):
            ExperimentConfig(model=model, n=10, c=0.2, k=1, replications=1)
        with pytest.raises(ConfigError):
            ExperimentConfig(model=model, n=10, c=0.2, k=2, replications=1,
                             subset_mode="bogus")
        with pytest.raises(ConfigError):
            ExperimentConfig(model=model, n=10, c=0.2, k=2, replications=1,
                             subset_mode="m")

    def test_subset_size(self):
        model = g.sinelog_model(0.0)
        full = ExperimentConfig(model=model, n=10_000, c=0.2, k=2, replications=1)
        assert full.subset_size == 10_000
        auto = ExperimentConfig(model=model, n=10_000, c=0.2, k=2,
                                replications=1, subset_mode="auto")
        assert auto.subset_size == 117
        fixed = ExperimentConfig(model=model, n=10_000, c=0.2, k=2,
                                 replications=1, subset_mode="m", subset_m=500)
        assert fixed.subset_size == 500


class TestReplicatedRuns:
    def test_deterministic(self):
        config = ExperimentConfig(model=g.sinelog_model(0.3), n=400, c=0.2,
                                  k=2, replications=5, seed=31)
        a = harness.run_replicated_test(config)
        b = harness.run_replicated_test(config)
        assert [r.statistic for r in a] == [r.statistic for r in b]
        assert [r.p_value for r in a] == [r.p_value for r in b]

    def test_single_replication_reproducible(self):
        config = ExperimentConfig(model=g.gumbel_model(1.5), n=300, c=0.3,
                                  k=3, replications=1, seed=8)
        r1 = harness.run_replicated_test(config)[0]
        r2 = harness.run_replicated_test(config)[0]
        assert r1.statistic == r2.statistic
        assert np.array_equal(r1.counts.counts, r2.counts.counts)

    def test_degenerate_recorded_not_fatal(self):
        config = ExperimentConfig(model=ConstantModel(), n=50, c=0.2, k=2,
                                  replications=3, seed=0)
        reports = harness.run_replicated_test(config)
        assert len(reports) == 3
        assert all(r.degenerate for r in reports)

    def test_threshold_grid(self):
        config = ExperimentConfig(model=g.sinelog_model(0.0), n=500,
                                  c=[0.1, 0.3], k=2, replications=2, seed=3)
        reports = harness.run_replicated_test(config)
        assert len(reports) == 4
        assert sorted({r.c for r in reports}) == [0.1, 0.3]


class TestQuantilePlotPoints:
    def test_abscissas(self):
        pts = harness.quantile_plot_points(np.random.default_rng(0).random(1000))
        assert_allclose(pts[:, 0], np.arange(1, 1001) / 1001.0)
        assert np.all(np.diff(pts[:, 1]) >= 0.0)

    def test_constant_values(self):
        pts = harness.quantile_plot_points([0.5, 0.5, 0.5])
        assert_allclose(pts[:, 1], 0.5)

    def test_uniform_grid_is_diagonal(self):
        r = 99
        ps = np.arange(1, r + 1) / (r + 1.0)
        pts = harness.quantile_plot_points(ps)
        assert_allclose(pts[:, 0], pts[:, 1], atol=1e-15)


class TestPValueCurve:
    def test_constant_dataset_all_missing(self):
        data = np.full((100, 2), 0.5)
        curve = harness.pvalue_curve(data, [0.1, 0.2, 0.3], 2)
        assert np.all(np.isnan(curve.p_values))

    def test_row_permutation_invariance(self):
        data = g.sample_sinelog_copula(2000, 0.0, 21)
        grid = [0.1, 0.2, 0.4]
        base = harness.pvalue_curve(data, grid, 2)
        perm = harness.pvalue_curve(
            data[np.random.default_rng(1).permutation(2000)], grid, 2)
        assert_allclose(base.p_values, perm.p_values, rtol=0, atol=0)

    def test_grid_validation(self):
        data = np.full((10, 2), 0.5)
        with pytest.raises(ConfigError):
            harness.pvalue_curve(data, [0.3, 0.2], 2)
        with pytest.raises(ConfigError):
            harness.pvalue_curve(data, [0.0, 0.2], 2)

    def test_fingerprint_tracks_data(self):
        a = harness.pvalue_curve(np.full((10, 2), 0.5), [0.2], 2)
        b = harness.pvalue_curve(np.full((10, 2), 0.6), [0.2], 2)
        assert a.dataset_fingerprint != b.dataset_fingerprint


class TestCsvEmission:
    def test_reports_round_trip(self, tmp_path):
        config = ExperimentConfig(model=g.sinelog_model(0.0), n=500, c=0.2,
                                  k=2, replications=4, seed=9)
        reports = harness.run_replicated_test(config)
        path = tmp_path / "reports.csv"
        harness.emit_reports_csv(reports, path)
        rows = harness.parse_reports_csv(path)
        assert len(rows) == 4
        for row, rep in zip(rows, reports):
            assert row["statistic"] == pytest.approx(rep.statistic, rel=1e-12)
            assert row["p_value"] == pytest.approx(rep.p_value, rel=1e-12)
            assert row["n1"] == rep.counts.counts[0]

    def test_reports_byte_identical(self, tmp_path):
        config = ExperimentConfig(model=g.sinelog_model(0.0), n=300, c=0.2,
                                  k=2, replications=3, seed=10)
        p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
        harness.emit_reports_csv(harness.run_replicated_test(config), p1)
        harness.emit_reports_csv(harness.run_replicated_test(config), p2)
        assert p1.read_bytes() == p2.read_bytes()

    def test_curve_round_trip_with_missing(self, tmp_path):
        curve = harness.PValueCurve(np.array([0.1, 0.2]),
                                    np.array([np.nan, 0.25]), "abc")
        path = tmp_path / "curve.csv"
        harness.emit_curve_csv(curve, path)
        text = path.read_text()
        assert text.splitlines()[0] == "c,p_value"
        assert text.splitlines()[1].endswith(",")  # missing p-value is empty
        back = harness.parse_curve_csv(path)
        assert np.isnan(back.p_values[0])
        assert back.p_values[1] == pytest.approx(0.25, rel=1e-12)

    def test_dataset_round_trip(self, tmp_path):
        rng = np.random.default_rng(11)
        data = rng.random((20, 3))
        path = tmp_path / "data.csv"
        harness.save_dataset_csv(data, path)
        back = harness.load_dataset_csv(path)
        assert_allclose(back, data, rtol=1e-12)
        header = path.read_text().splitlines()[0]
        assert header == "0,1,2"

    def test_process_round_trip(self, tmp_path):
        sample = g.sample_pareto_process(15, 0.2, g.GridSpec.equidistant(5), 12)
        path = tmp_path / "paths.csv"
        harness.save_process_csv(sample, path)
        grid, values = harness.load_process_csv(path)
        assert_allclose(grid, sample.grid.points, rtol=1e-12)
        assert_allclose(values, sample.values, rtol=1e-12)


class TestSvgEmission:
    def test_quantile_plot_contents(self, tmp_path):
        ps = np.random.default_rng(13).random(50)
        pts = harness.quantile_plot_points(ps)
        path = tmp_path / "q.svg"
        harness.emit_svg_plot(pts, path, style="quantile")
        text = path.read_text()
        assert text.count("<circle") == 50
        assert 'class="reference"' in text

    def test_curve_plot_skips_missing(self, tmp_path):
        pts = np.array([[0.1, 0.5], [0.2, np.nan], [0.3, 0.01]])
        path = tmp_path / "c.svg"
        harness.emit_svg_plot(pts, path, style="curve")
        text = path.read_text()
        assert text.count("<circle") == 2
        assert 'class="reference"' in text

    def test_unknown_style(self, tmp_path):
        with pytest.raises(ValueError):
            harness.emit_svg_plot(np.zeros((1, 2)), tmp_path / "x.svg", style="pie")
