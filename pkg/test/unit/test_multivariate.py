import math

import numpy as np
import pytest

from vgpp_pricing.domain.distributions import RngStream
from vgpp_pricing.domain.errors import DomainError
from vgpp_pricing.domain.gammapp import GammaPPParams, gpp_chf, gpp_cumulants
from vgpp_pricing.domain.multivariate import (
    AssetLoading,
    BrownianLayer,
    MultiGPPParams,
    marginal_params,
    sample_multivariate_subordinator,
    sample_multivariate_vgpp,
)

TWO_ASSETS = MultiGPPParams(
    a=0.5, alpha_common=4.0, beta=5.0, assets=(AssetLoading(alpha=2.0, c=1.0), AssetLoading(alpha=6.0, c=2.0))
)


class TestMultiGPPParams:
    def test_needs_an_asset(self):
        with pytest.raises(DomainError):
            MultiGPPParams(a=0.5, alpha_common=1.0, beta=1.0, assets=())

    @pytest.mark.parametrize("alpha, c", [(-1.0, 1.0), (1.0, 0.0)])
    def test_invalid_loading(self, alpha, c):
        with pytest.raises(DomainError):
            AssetLoading(alpha=alpha, c=c)

    def test_marginal_law(self):
        marginal = marginal_params(TWO_ASSETS, 1)
        assert marginal == GammaPPParams(a=0.5, alpha=10.0, beta=2.5)

    def test_marginal_chf_is_the_sum_of_its_parts(self):
        u = np.linspace(-15.0, 15.0, 31)
        for i, asset in enumerate(TWO_ASSETS.assets):
            expected = gpp_chf(TWO_ASSETS.idiosyncratic(i), 0.7, u) * gpp_chf(TWO_ASSETS.common, 0.7, asset.c * u)
            np.testing.assert_allclose(gpp_chf(marginal_params(TWO_ASSETS, i), 0.7, u), expected, rtol=1e-12)

    def test_index_out_of_range(self):
        with pytest.raises(IndexError):
            marginal_params(TWO_ASSETS, 2)


class TestSubordinatorSampling:
    def test_pure_common_factor_is_comonotone(self):
        params = MultiGPPParams(
            a=0.5, alpha_common=3.0, beta=2.0, assets=(AssetLoading(alpha=0.0, c=1.0), AssetLoading(alpha=0.0, c=3.0))
        )
        first, second = sample_multivariate_subordinator(params, np.linspace(0.0, 1.0, 5), RngStream(101), 200)
        np.testing.assert_allclose(3.0 * first.z_values, second.z_values, rtol=1e-14)

    def test_covariance_comes_from_the_common_factor(self):
        n = 100_000
        first, second = sample_multivariate_subordinator(TWO_ASSETS, [0.0, 1.0], RngStream(102), n)
        covariance = np.cov(first.terminal_z, second.terminal_z)[0, 1]
        expected = 1.0 * 2.0 * gpp_cumulants(TWO_ASSETS.common, 1.0, 2)
        assert expected == pytest.approx(4.0 * (1.0 - 0.25) / 25.0 * 2.0)
        assert covariance == pytest.approx(expected, rel=0.05)

    def test_zero_fractions_match_marginal_atoms(self):
        n = 100_000
        t = 0.1
        batches = sample_multivariate_subordinator(TWO_ASSETS, [0.0, t], RngStream(103), n)
        for i, batch in enumerate(batches):
            p = marginal_params(TWO_ASSETS, i).atom(t)
            assert abs(np.mean(batch.terminal_z == 0.0) - p) < 4 * math.sqrt(p * (1 - p) / n)

    def test_marginal_means(self):
        n = 100_000
        batches = sample_multivariate_subordinator(TWO_ASSETS, [0.0, 1.0], RngStream(104), n)
        for i, batch in enumerate(batches):
            marginal = marginal_params(TWO_ASSETS, i)
            stderr = math.sqrt(gpp_cumulants(marginal, 1.0, 2) / n)
            assert abs(batch.terminal_z.mean() - gpp_cumulants(marginal, 1.0, 1)) < 4 * stderr

    def test_seed_determinism(self):
        grid = np.linspace(0.0, 1.0, 4)
        first = sample_multivariate_subordinator(TWO_ASSETS, grid, RngStream(105), 10)
        second = sample_multivariate_subordinator(TWO_ASSETS, grid, RngStream(105), 10)
        for left, right in zip(first, second):
            np.testing.assert_array_equal(left.z_values, right.z_values)


class TestMultivariateVGPP:
    def test_layer_count_must_match(self):
        with pytest.raises(DomainError):
            sample_multivariate_vgpp(TWO_ASSETS, [BrownianLayer(0.0, 0.2)], [0.0, 1.0], RngStream(106))

    def test_log_price_moves_only_with_the_clock(self):
        layers = [BrownianLayer(-0.1, 0.2), BrownianLayer(0.05, 0.3)]
        batches = sample_multivariate_vgpp(TWO_ASSETS, layers, np.linspace(0.0, 1.0, 21), RngStream(107), 500)
        for batch in batches:
            dz = np.diff(batch.z_values, axis=1)
            dx = np.diff(batch.x_values, axis=1)
            np.testing.assert_array_equal(dx[dz == 0.0], 0.0)
            assert np.all(dx[dz > 0.0] != 0.0)
