"""Tests for the D-norm evaluators and tags."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from gpctest import dnorms


ALL_NORMS = [
    dnorms.dnorm_l1,
    dnorms.dnorm_sup,
    lambda x: dnorms.dnorm_logistic(x, 1.7),
    dnorms.dnorm_split_uniform,
    dnorms.dnorm_two_uniforms,
]


class TestValues:
    def test_split_uniform(self):
        assert dnorms.dnorm_split_uniform((1.0, 1.0)) == 1.5
        assert dnorms.dnorm_split_uniform((1.0, 0.0)) == 1.0
        assert dnorms.dnorm_split_uniform((2.0, 2.0)) == 3.0
        assert dnorms.dnorm_split_uniform((0.0, 0.0)) == 0.0

    def test_two_uniforms(self):
        assert_allclose(dnorms.dnorm_two_uniforms((1.0, 1.0)), 4.0 / 3.0)
        assert dnorms.dnorm_two_uniforms((1.0, 0.0)) == 1.0
        assert_allclose(dnorms.dnorm_two_uniforms((3.0, 1.0)), 3.0 + 1.0 / 9.0)

    def test_two_uniforms_monte_carlo(self):
        # 2 E max(|x1| U1, |x2| U2) with independent uniforms
        rng = np.random.default_rng(3)
        u1, u2 = rng.random(10 ** 6), rng.random(10 ** 6)
        mc = 2.0 * np.mean(np.maximum(3.0 * u1, 1.0 * u2))
        assert abs(mc - dnorms.dnorm_two_uniforms((3.0, 1.0))) < 3e-3

    def test_split_uniform_monte_carlo(self):
        rng = np.random.default_rng(4)
        s = rng.random(10 ** 6)
        mc = 2.0 * np.mean(np.maximum(2.0 * s, 1.0 * (1.0 - s)))
        assert abs(mc - dnorms.dnorm_split_uniform((2.0, 1.0))) < 3e-3


class TestNormAxioms:
    def test_homogeneity_exact(self):
        rng = np.random.default_rng(5)
        for _ in range(100):
            x = rng.normal(size=2)
            for norm in (dnorms.dnorm_split_uniform, dnorms.dnorm_two_uniforms):
                assert_allclose(norm(2.0 * x), 2.0 * norm(x), rtol=1e-14)
                assert_allclose(norm(-x), norm(x), rtol=0)

    def test_triangle_inequality(self):
        rng = np.random.default_rng(6)
        for _ in range(1000):
            x, y = rng.normal(size=2), rng.normal(size=2)
            for norm in (dnorms.dnorm_split_uniform, dnorms.dnorm_two_uniforms):
                assert norm(x + y) <= norm(x) + norm(y) + 1e-12

    def test_sandwich(self):
        # sup-norm <= D-norm <= L1 norm
        rng = np.random.default_rng(7)
        for _ in range(1000):
            x = rng.normal(size=2)
            lo, hi = dnorms.dnorm_sup(x), dnorms.dnorm_l1(x)
            for norm in (dnorms.dnorm_split_uniform, dnorms.dnorm_two_uniforms,
                         lambda v: dnorms.dnorm_logistic(v, 1.7)):
                val = norm(x)
                assert lo - 1e-12 <= val <= hi + 1e-12


class TestTags:
    def test_extremal_coefficients(self):
        assert dnorms.l1_tag(4).extremal_coefficient == 4.0
        assert dnorms.sup_tag(4).extremal_coefficient == 1.0
        assert_allclose(dnorms.logistic_tag(2.0, 4).extremal_coefficient, 2.0)
        assert dnorms.split_uniform_tag().extremal_coefficient == 1.5
        assert_allclose(dnorms.two_uniforms_tag().extremal_coefficient, 4.0 / 3.0)

    def test_extremal_coefficient_in_range(self):
        for d in (2, 3, 7):
            for tag in (dnorms.l1_tag(d), dnorms.sup_tag(d),
                        dnorms.logistic_tag(1.3, d)):
                assert 1.0 <= tag.extremal_coefficient <= d

    def test_logistic_requires_theta_geq_one(self):
        with pytest.raises(ValueError):
            dnorms.dnorm_logistic((1.0, 1.0), 0.5)
