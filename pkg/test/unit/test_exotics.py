import math

import numpy as np
import pytest

from vgpp_pricing.domain.distributions import RngStream
from vgpp_pricing.domain.ept import CGMParams, vg_ept_call
from vgpp_pricing.domain.errors import DomainError
from vgpp_pricing.domain.exotics import (
    LSMCConfig,
    SimulationDirection,
    VGParams,
    moment_matched_vg,
    price_american_put_lsmc,
    price_european_vg_mc,
    price_lookback_call_max,
    price_lookback_ladder,
    vg_market_omega,
    vg_path_forward,
    vg_sample,
)
from vgpp_pricing.domain.pricing import MarketModel, price_call_closed, price_put_closed
from vgpp_pricing.domain.vgpp import SliceLedger, VGPPParams

REFERENCE = VGPPParams.unit_mean_clock(theta=-0.1436, sigma=0.2, a=0.5, alpha=10.0)
SMALL_LSMC = LSMCConfig(n_paths=20_000, n_steps=6, basis_degree=3)


class TestLSMCConfig:
    @pytest.mark.parametrize(
        "kwargs", [{"n_paths": 9_999}, {"n_steps": 3}, {"basis_degree": 1}, {"basis_degree": 6}]
    )
    def test_minimums(self, kwargs):
        with pytest.raises(DomainError):
            LSMCConfig(**kwargs)


class TestAmericanPut:
    @pytest.mark.parametrize("F0", [float(level) for level in range(45, 66)])
    def test_never_below_intrinsic(self, F0):
        market = MarketModel(F0=F0, r=0.05)
        price = price_american_put_lsmc(REFERENCE, market, 56.0, 0.26, SMALL_LSMC, RngStream(81))
        assert price.price >= max(56.0 - F0, 0.0)

    @pytest.mark.parametrize("F0", [float(level) for level in range(45, 66)])
    def test_not_below_european(self, F0):
        market = MarketModel(F0=F0, r=0.05)
        american = price_american_put_lsmc(REFERENCE, market, 56.0, 0.26, SMALL_LSMC, RngStream(82))
        european = price_put_closed(REFERENCE, market, 56.0, 0.26)
        assert american.price >= european

    def test_forward_and_backward_simulation_agree(self):
        market = MarketModel(F0=54.0, r=0.05)
        forward = price_american_put_lsmc(REFERENCE, market, 56.0, 0.26, SMALL_LSMC, RngStream(83))
        backward_cfg = LSMCConfig(n_paths=20_000, n_steps=6, direction=SimulationDirection.BACKWARD)
        backward = price_american_put_lsmc(REFERENCE, market, 56.0, 0.26, backward_cfg, RngStream(84))
        assert abs(forward.price - backward.price) < 2 * math.hypot(forward.stderr, backward.stderr)

    def test_backward_simulation_keeps_two_slices(self):
        ledger = SliceLedger()
        cfg = LSMCConfig(n_paths=10_000, n_steps=8, direction=SimulationDirection.BACKWARD)
        price_american_put_lsmc(REFERENCE, MarketModel(F0=56.0, r=0.05), 56.0, 0.26, cfg, RngStream(85), ledger)
        assert ledger.peak == 2
        assert ledger.live == 0

    def test_forward_simulation_keeps_the_whole_grid(self):
        ledger = SliceLedger()
        cfg = LSMCConfig(n_paths=10_000, n_steps=8)
        price_american_put_lsmc(REFERENCE, MarketModel(F0=56.0, r=0.05), 56.0, 0.26, cfg, RngStream(86), ledger)
        assert ledger.peak == 9
        assert ledger.live == 0

    def test_seed_determinism(self):
        market = MarketModel(F0=52.0, r=0.05)
        first = price_american_put_lsmc(REFERENCE, market, 56.0, 0.26, SMALL_LSMC, RngStream(87))
        second = price_american_put_lsmc(REFERENCE, market, 56.0, 0.26, SMALL_LSMC, RngStream(87))
        assert first == second

    def test_invalid_strike(self):
        with pytest.raises(DomainError):
            price_american_put_lsmc(REFERENCE, MarketModel(F0=56.0, r=0.05), 0.0, 0.26, SMALL_LSMC, RngStream(88))


class TestLookback:
    def test_single_date_is_european(self):
        market = MarketModel(F0=100.0, r=0.01)
        lookback = price_lookback_call_max(REFERENCE, market, 100.0, 0.5, 1, 100_000, RngStream(91))
        european = price_call_closed(REFERENCE, market, 100.0, 0.5, cutoff=1e-8)
        assert abs(lookback.price - european) < 3 * lookback.stderr

    def test_not_below_european(self):
        market = MarketModel(F0=100.0, r=0.01)
        lookback = price_lookback_call_max(REFERENCE, market, 100.0, 0.5, 20, 50_000, RngStream(92))
        european = price_call_closed(REFERENCE, market, 100.0, 0.5, cutoff=1e-8)
        assert lookback.price > european

    def test_ladder_is_non_decreasing(self):
        prices = price_lookback_ladder(
            REFERENCE, MarketModel(F0=100.0, r=0.01), 105.0, 1.0, [1, 2, 4, 8, 16], 20_000, RngStream(93)
        )
        values = [p.price for p in prices]
        assert all(low <= high for low, high in zip(values, values[1:]))

    def test_ladder_must_nest(self):
        with pytest.raises(DomainError):
            price_lookback_ladder(REFERENCE, MarketModel(F0=100.0, r=0.01), 100.0, 1.0, [3, 4], 1_000, RngStream(94))

    def test_vg_driver(self):
        vg = moment_matched_vg(REFERENCE)
        prices = price_lookback_ladder(vg, MarketModel(F0=100.0, r=0.01), 100.0, 1.0, [1, 4], 20_000, RngStream(95))
        assert prices[0].price <= prices[1].price


class TestVGBaseline:
    def test_moment_matched_clock(self):
        vg = moment_matched_vg(REFERENCE)
        clock_mean = REFERENCE.alpha * (1.0 - REFERENCE.a) / REFERENCE.beta
        clock_variance = REFERENCE.alpha * (1.0 - REFERENCE.a**2) / REFERENCE.beta**2
        assert vg.alpha / vg.beta == pytest.approx(clock_mean, rel=1e-14)
        assert vg.alpha / vg.beta**2 == pytest.approx(clock_variance, rel=1e-14)
        assert (vg.theta, vg.sigma) == (REFERENCE.theta, REFERENCE.sigma)

    def test_samples_have_no_atom(self):
        draws = vg_sample(moment_matched_vg(REFERENCE), 0.01, RngStream(96), 10_000)
        assert np.count_nonzero(draws == 0.0) == 0

    def test_path_shape(self):
        path = vg_path_forward(moment_matched_vg(REFERENCE), np.linspace(0.0, 1.0, 6), RngStream(97), 40)
        assert path.x_values.shape == (40, 6)
        np.testing.assert_array_equal(path.x_values[:, 0], 0.0)
        assert np.all(np.diff(path.z_values, axis=1) > 0.0)

    def test_european_matches_exponential_polynomial_formula(self):
        vg = VGParams(theta=-0.1436, sigma=0.2, alpha=2.0, beta=10.0)
        G, M = vg.cgm
        market = MarketModel(F0=100.0, r=0.01)
        omega = vg_market_omega(vg)
        exact = vg_ept_call(CGMParams(C=2, G=G, M=M), 100.0, 100.0, 0.01, 1.0, omega)
        mc = price_european_vg_mc(vg, market, 100.0, 1.0, 200_000, RngStream(98))
        assert abs(mc.price - exact) < 3 * mc.stderr

    def test_put_call_parity(self):
        vg = moment_matched_vg(REFERENCE)
        market = MarketModel(F0=100.0, r=0.01)
        call = price_european_vg_mc(vg, market, 100.0, 1.0, 50_000, RngStream(99))
        put = price_european_vg_mc(vg, market, 100.0, 1.0, 50_000, RngStream(99), put=True)
        parity = 100.0 - 100.0 * market.discount(1.0)
        assert call.price - put.price == pytest.approx(parity, abs=4 * (call.stderr + put.stderr))

    def test_invalid_params(self):
        with pytest.raises(DomainError):
            VGParams(theta=0.0, sigma=0.0, alpha=1.0, beta=1.0)
