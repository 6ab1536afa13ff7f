import math

import numpy as np
import pytest
from scipy import stats

from vgpp_pricing.domain.distributions import (
    PolyaParams,
    RngStream,
    beta_binomial_logpmf,
    beta_binomial_sample,
    chunk_sizes,
    exp_sample,
    gamma_sample,
    normal_sample,
    partitioned_map,
    poisson_sample,
    polya_logpmf,
    polya_pmf,
    polya_sample,
)
from vgpp_pricing.domain.errors import DomainError


class TestRngStream:
    def test_same_seed_and_stream_reproduce_draws(self):
        first = RngStream(42, 3).generator.standard_normal(10)
        second = RngStream(42, 3).generator.standard_normal(10)
        np.testing.assert_array_equal(first, second)

    def test_distinct_streams_differ(self):
        first = RngStream(42, 0).generator.standard_normal(10)
        second = RngStream(42, 1).generator.standard_normal(10)
        assert not np.array_equal(first, second)

    def test_substream_is_reproducible_and_distinct_from_parent(self):
        parent = RngStream(7)
        child = parent.substream(2).generator.random(5)
        again = RngStream(7).substream(2).generator.random(5)
        np.testing.assert_array_equal(child, again)
        assert not np.array_equal(child, RngStream(7).generator.random(5))

    def test_negative_seed_is_rejected(self):
        with pytest.raises(ValueError):
            RngStream(-1)

    def test_seed_info(self):
        assert RngStream(11, 4).seed_info == (11, 4)


class TestPolya:
    def test_pmf_examples(self):
        assert polya_pmf(PolyaParams(2.0, 0.3), 1) == pytest.approx(0.294, abs=1e-12)
        assert polya_pmf(PolyaParams(1.0, 0.5), 0) == pytest.approx(0.5, abs=1e-12)

    def test_pmf_matches_scipy_negative_binomial(self):
        params = PolyaParams(3.7, 0.4)
        k = np.arange(40)
        expected = stats.nbinom.pmf(k, 3.7, 1.0 - 0.4)
        np.testing.assert_allclose(polya_pmf(params, k), expected, rtol=1e-10)

    def test_pmf_sums_to_one(self):
        params = PolyaParams(5.0, 0.3)
        assert np.sum(polya_pmf(params, np.arange(500))) == pytest.approx(1.0, abs=1e-12)

    def test_logpmf_rejects_non_integer_support(self):
        with pytest.raises(DomainError):
            polya_logpmf(PolyaParams(2.0, 0.5), -1)
        with pytest.raises(DomainError):
            polya_logpmf(PolyaParams(2.0, 0.5), 1.5)

    def test_mean_and_variance(self):
        params = PolyaParams(5.0, 0.3)
        assert params.mean == pytest.approx(2.142857, abs=1e-6)
        assert params.variance == pytest.approx(5.0 * 0.3 / 0.49, rel=1e-12)

    @pytest.mark.parametrize("shape, p", [(0.0, 0.5), (-1.0, 0.5), (1.0, 0.0), (1.0, 1.0)])
    def test_invalid_params_are_rejected(self, shape, p):
        with pytest.raises(DomainError):
            PolyaParams(shape, p)

    def test_sample_mean_within_three_standard_errors(self):
        params = PolyaParams(5.0, 0.3)
        n = 200_000
        draws = polya_sample(params, RngStream(1), n)
        stderr = math.sqrt(params.variance / n)
        assert abs(draws.mean() - params.mean) < 3 * stderr

    def test_sample_is_seed_deterministic(self):
        params = PolyaParams(2.5, 0.6)
        np.testing.assert_array_equal(
            polya_sample(params, RngStream(9), 100), polya_sample(params, RngStream(9), 100)
        )


class TestBetaBinomial:
    def test_uniform_case(self):
        j = np.arange(10)
        np.testing.assert_allclose(np.exp(beta_binomial_logpmf(1.0, 1.0, 9, j)), 0.1, rtol=1e-12)

    def test_zero_trials_puts_all_mass_at_zero(self):
        assert np.exp(beta_binomial_logpmf(2.0, 3.0, 0, 0)) == pytest.approx(1.0)

    def test_matches_scipy(self):
        j = np.arange(13)
        np.testing.assert_allclose(
            np.exp(beta_binomial_logpmf(0.7, 2.3, 12, j)), stats.betabinom.pmf(j, 12, 0.7, 2.3), rtol=1e-10
        )

    def test_sample_stays_in_range(self):
        draws = np.asarray(beta_binomial_sample(1.5, 2.5, 7, RngStream(3), 1000))
        assert draws.min() >= 0
        assert draws.max() <= 7

    def test_zero_trials_sample_is_zero(self):
        draws = np.asarray(beta_binomial_sample(1.5, 2.5, 0, RngStream(3), 10))
        assert np.all(draws == 0)


class TestBaseSamplers:
    def test_gamma_mean(self):
        draws = gamma_sample(5.0, 15.0, RngStream(2), 200_000)
        assert abs(draws.mean() - 1.0 / 3.0) < 3 * math.sqrt(5.0 / 225.0 / 200_000)

    def test_exp_mean(self):
        draws = exp_sample(2.0, RngStream(2), 200_000)
        assert abs(draws.mean() - 0.5) < 3 * 0.5 / math.sqrt(200_000)

    def test_poisson_mean(self):
        mean = 10.0 * 0.1 * math.log(2.0)
        assert mean == pytest.approx(0.6931, abs=1e-4)
        draws = poisson_sample(mean, RngStream(2), 200_000)
        assert abs(draws.mean() - mean) < 3 * math.sqrt(mean / 200_000)

    def test_normal_with_zero_variance_returns_mean(self):
        draws = normal_sample(np.array([1.5, -2.0]), np.array([0.0, 0.0]), RngStream(2))
        np.testing.assert_array_equal(draws, [1.5, -2.0])

    def test_non_positive_gamma_rate_is_rejected(self):
        with pytest.raises(DomainError):
            gamma_sample(1.0, 0.0, RngStream(2), 3)


class TestPartition:
    def test_chunk_sizes(self):
        assert chunk_sizes(10, 4) == [4, 4, 2]
        assert chunk_sizes(8, 4) == [4, 4]
        assert chunk_sizes(0, 4) == []

    def test_invalid_chunk_size(self):
        with pytest.raises(ValueError):
            chunk_sizes(10, 0)

    def test_result_does_not_depend_on_worker_count(self):
        def task(size, stream):
            return stream.generator.standard_normal(size)

        serial = np.concatenate(partitioned_map(task, 1_000, RngStream(5), 128, workers=1))
        threaded = np.concatenate(partitioned_map(task, 1_000, RngStream(5), 128, workers=4))
        np.testing.assert_array_equal(serial, threaded)
        assert serial.size == 1_000
