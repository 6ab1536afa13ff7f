import math

import numpy as np
import pytest

from vgpp_pricing.domain.distributions import RngStream
from vgpp_pricing.domain.errors import DomainError
from vgpp_pricing.domain.pricing import (
    FFTConfig,
    MarketModel,
    price_call_closed,
    price_call_closed_detail,
    price_call_fft,
    price_call_mc,
    price_calls_mc,
    price_put_closed,
    price_put_fft,
    vgpp_omega,
)
from vgpp_pricing.domain.vgpp import VGPPParams, vgpp_chf, vgpp_sample

REFERENCE = VGPPParams(theta=-0.1436, sigma=0.2, a=0.5, alpha=10.0, beta=5.0)
MARKET = MarketModel(F0=100.0, r=0.01)


class TestMarketModel:
    def test_forward_must_be_positive(self):
        with pytest.raises(DomainError):
            MarketModel(F0=0.0, r=0.01)

    def test_discount(self):
        assert MARKET.discount(2.0) == pytest.approx(math.exp(-0.02))


class TestOmega:
    def test_reference_value(self):
        assert vgpp_omega(REFERENCE) == pytest.approx(0.12137, abs=1e-3)

    def test_zero_when_exponent_shift_vanishes(self):
        params = VGPPParams(theta=-0.02, sigma=0.2, a=0.5, alpha=10.0, beta=5.0)
        assert vgpp_omega(params) == pytest.approx(0.0, abs=1e-15)

    def test_equals_minus_log_chf_at_minus_i(self):
        value = vgpp_chf(REFERENCE, 1.0, -1j)
        assert vgpp_omega(REFERENCE) + math.log(value.real) == pytest.approx(0.0, abs=1e-12)

    def test_missing_exponential_moment(self):
        with pytest.raises(DomainError, match="theta"):
            vgpp_omega(VGPPParams(theta=5.0, sigma=0.2, a=0.5, alpha=1.0, beta=1.0))

    def test_martingale_by_simulation(self):
        omega = vgpp_omega(REFERENCE)
        for T in (0.25, 1.0):
            n = 200_000
            growth = np.exp(omega * T + vgpp_sample(REFERENCE, T, RngStream(61), n))
            assert abs(growth.mean() - 1.0) < 3 * growth.std(ddof=1) / math.sqrt(n)


class TestClosedPricer:
    def test_vanishing_strike_returns_forward(self):
        assert price_call_closed(REFERENCE, MARKET, 1e-6, 1.0, cutoff=1e-9) == pytest.approx(100.0, rel=1e-6)

    def test_detail_reports_terms_and_omega(self):
        detail = price_call_closed_detail(REFERENCE, MARKET, 100.0, 1.0)
        assert detail.terms_used >= 10
        assert detail.omega == pytest.approx(vgpp_omega(REFERENCE))
        assert detail.price > 0.0

    def test_matrix_and_incomplete_gamma_series_agree(self):
        matrix = price_call_closed(REFERENCE, MARKET, 95.0, 0.5)
        series = price_call_closed(REFERENCE, MARKET, 95.0, 0.5, matrix_form=False)
        assert matrix == pytest.approx(series, rel=1e-9)

    def test_put_call_parity(self):
        call = price_call_closed(REFERENCE, MARKET, 110.0, 1.0)
        put = price_put_closed(REFERENCE, MARKET, 110.0, 1.0)
        assert call - put == pytest.approx(100.0 - 110.0 * MARKET.discount(1.0), abs=1e-10)

    def test_decreasing_in_strike_and_increasing_in_maturity(self):
        by_strike = [price_call_closed(REFERENCE, MARKET, K, 1.0) for K in (80.0, 90.0, 100.0, 110.0, 120.0)]
        by_maturity = [price_call_closed(REFERENCE, MARKET, 100.0, T) for T in (0.25, 0.5, 1.0)]
        assert np.all(np.diff(by_strike) < 0.0)
        assert np.all(np.diff(by_maturity) > 0.0)

    def test_halving_cutoff_barely_moves_price(self):
        coarse = price_call_closed(REFERENCE, MARKET, 100.0, 1.0, cutoff=1e-4)
        fine = price_call_closed(REFERENCE, MARKET, 100.0, 1.0, cutoff=5e-5)
        # the dropped tail decays geometrically past the stopping term
        assert abs(fine - coarse) < 2e-4 * coarse

    @pytest.mark.parametrize("cutoff", [0.0, 0.5])
    def test_cutoff_range(self, cutoff):
        with pytest.raises(DomainError):
            price_call_closed(REFERENCE, MARKET, 100.0, 1.0, cutoff=cutoff)


class TestFFTPricer:
    def test_config_validation(self):
        with pytest.raises(DomainError):
            FFTConfig(grid_size=1000)
        with pytest.raises(DomainError):
            FFTConfig(damping=0.0)

    def test_agrees_with_closed_formula(self):
        fft = price_call_fft(REFERENCE, MARKET, [100.0], 1.0)[0]
        assert abs(fft - price_call_closed(REFERENCE, MARKET, 100.0, 1.0)) < 5e-3

    def test_pricer_triangle_across_grid(self):
        strikes = np.array([80.0, 90.0, 100.0, 110.0, 120.0])
        for T in (0.25, 0.5, 1.0):
            fft = price_call_fft(REFERENCE, MARKET, strikes, T)
            closed = np.array([price_call_closed(REFERENCE, MARKET, K, T) for K in strikes])
            assert np.max(np.abs(fft - closed)) < 5e-3

    def test_atom_left_in_the_transform(self):
        fft = price_call_fft(REFERENCE, MARKET, [100.0], 1.0, FFTConfig(separate_atom=False))[0]
        assert abs(fft - price_call_closed(REFERENCE, MARKET, 100.0, 1.0)) < 5e-3

    def test_deep_in_the_money(self):
        K = 1.0
        price = price_call_fft(REFERENCE, MARKET, [K], 1.0)[0]
        assert price == pytest.approx(100.0 - K * MARKET.discount(1.0), abs=1e-4)

    def test_put_call_parity(self):
        strikes = np.array([90.0, 100.0, 110.0])
        calls = price_call_fft(REFERENCE, MARKET, strikes, 1.0)
        puts = price_put_fft(REFERENCE, MARKET, strikes, 1.0)
        np.testing.assert_allclose(calls - puts, 100.0 - strikes * MARKET.discount(1.0), atol=1e-10)

    def test_far_out_of_the_money_puts_are_never_negative(self):
        strikes = np.array([1.0, 2.0, 5.0, 10.0])
        puts = price_put_fft(REFERENCE, MARKET, strikes, 1.0)
        assert np.all(puts >= 0.0)
        np.testing.assert_allclose(puts, 0.0, atol=1e-4)

    def test_damping_without_moment_is_rejected(self):
        with pytest.raises(DomainError):
            price_call_fft(REFERENCE, MARKET, [100.0], 1.0, FFTConfig(damping=100.0))


class TestMonteCarloPricer:
    def test_agrees_with_closed_formula(self):
        mc = price_call_mc(REFERENCE, MARKET, 100.0, 1.0, 200_000, RngStream(62))
        assert abs(mc.price - price_call_closed(REFERENCE, MARKET, 100.0, 1.0)) < 3 * mc.stderr
        assert mc.n_paths == 200_000

    @pytest.mark.slow
    @pytest.mark.parametrize("T", [0.25, 0.5, 1.0])
    def test_agrees_with_closed_formula_at_a_million_paths(self, T):
        strikes = [80.0, 90.0, 100.0, 110.0, 120.0]
        seed = {0.25: 63, 0.5: 163, 1.0: 263}[T]
        prices = price_calls_mc(REFERENCE, MARKET, strikes, T, 1_000_000, RngStream(seed), workers=4)
        for K, mc in zip(strikes, prices):
            assert abs(mc.price - price_call_closed(REFERENCE, MARKET, K, T)) < 3 * mc.stderr
            assert mc.stderr < 3e-2

    def test_degenerate_process_prices_intrinsic(self):
        params = VGPPParams(theta=1e-6, sigma=1e-4, a=0.999, alpha=10.0, beta=5.0)
        mc = price_call_mc(params, MARKET, 95.0, 1.0, 10_000, RngStream(64))
        assert mc.price == pytest.approx(100.0 - 95.0 * MARKET.discount(1.0), abs=1e-3)

    def test_doubling_paths_shrinks_stderr(self):
        small = price_call_mc(REFERENCE, MARKET, 100.0, 1.0, 50_000, RngStream(65))
        large = price_call_mc(REFERENCE, MARKET, 100.0, 1.0, 100_000, RngStream(66))
        assert 1.3 < small.stderr / large.stderr < 1.55

    def test_workers_do_not_change_result(self):
        serial = price_calls_mc(REFERENCE, MARKET, [90.0, 110.0], 1.0, 20_000, RngStream(67), chunk_size=4_096)
        threaded = price_calls_mc(
            REFERENCE, MARKET, [90.0, 110.0], 1.0, 20_000, RngStream(67), workers=4, chunk_size=4_096
        )
        assert [p.price for p in serial] == [p.price for p in threaded]

    def test_put_flag(self):
        call, = price_calls_mc(REFERENCE, MARKET, [100.0], 1.0, 50_000, RngStream(68))
        put, = price_calls_mc(REFERENCE, MARKET, [100.0], 1.0, 50_000, RngStream(68), put=True)
        # common random numbers: parity holds up to the sample mean of the discounted forward
        parity = 100.0 - 100.0 * MARKET.discount(1.0)
        assert call.price - put.price == pytest.approx(parity, abs=4 * (call.stderr + put.stderr))

    def test_minimum_paths(self):
        with pytest.raises(DomainError):
            price_call_mc(REFERENCE, MARKET, 100.0, 1.0, 999, RngStream(69))
