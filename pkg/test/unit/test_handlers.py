import asyncio
import math
from pathlib import Path

import numpy as np
import pandas as pd
import pytest
from mediatr import Mediator

from vgpp_pricing.app_module import create_injector
from vgpp_pricing.application import (
    CalibrateCommand,
    CalibrateCommandHandler,
    ExoticCommand,
    ExoticCommandHandler,
    MultiSimulateCommand,
    MultiSimulateCommandHandler,
    PriceCommand,
    PriceCommandHandler,
    SimulateCommand,
    SimulateCommandHandler,
    TriangleCommand,
    TriangleCommandHandler,
)
from vgpp_pricing.domain.calibration import CalibrationMethod
from vgpp_pricing.domain.config import Command, RunConfig, VgppOptions, clear_vgpp_options_cache
from vgpp_pricing.domain.distributions import RngStream
from vgpp_pricing.domain.errors import DomainError
from vgpp_pricing.domain.exotics import SimulationDirection
from vgpp_pricing.domain.multivariate import AssetLoading
from vgpp_pricing.domain.pricing import MarketModel, price_call_closed
from vgpp_pricing.domain.reports import ContractKind, PriceMethod, ProcessKind, SimulationReport
from vgpp_pricing.domain.vgpp import VGPPParams, vgpp_sample
from vgpp_pricing.infrastructure.services import ArtifactStore

REFERENCE = VGPPParams.unit_mean_clock(theta=-0.1436, sigma=0.2, a=0.5, alpha=10.0)
MARKET = MarketModel(F0=100.0, r=0.01)


@pytest.fixture
def options() -> VgppOptions:
    return VgppOptions().model_copy(update={"mc_chunk_size": 1_000})


@pytest.fixture
def store() -> ArtifactStore:
    return ArtifactStore()


def _config(command: Command, tmp_path: Path, **kwargs) -> RunConfig:
    return RunConfig(command=command, output=str(tmp_path / f"{command.value}.json"), **kwargs)


class TestSimulateCommandHandler:
    def _run(self, options, store, config) -> SimulationReport:
        return asyncio.run(SimulateCommandHandler(store, options).handle(SimulateCommand(config)))

    def test_report_and_path_files(self, options, store, tmp_path):
        config = _config(Command.SIMULATE, tmp_path, seed=3, params=REFERENCE)
        config.simulate.paths, config.simulate.steps, config.simulate.save_paths = 2_000, 4, 2
        report = self._run(options, store, config)

        assert report.path_files == ["simulate_path_0.csv", "simulate_path_1.csv"]
        frame = pd.read_csv(tmp_path / "simulate_path_1.csv")
        assert list(frame.columns) == ["t", "z", "x"]
        assert len(frame) == 5
        assert report.atom_probability == pytest.approx(0.5**2.5)
        n_steps = 2_000 * 4
        p = report.atom_probability
        assert abs(report.zero_increment_fraction - p) < 4 * math.sqrt(p * (1 - p) / n_steps)
        assert (tmp_path / "simulate.json").exists()

    def test_worker_count_does_not_change_the_draws(self, options, store, tmp_path):
        config = _config(Command.SIMULATE, tmp_path, seed=4, params=REFERENCE)
        config.simulate.paths, config.simulate.save_paths = 5_000, 0
        serial = self._run(options, store, config)
        threaded = self._run(options.model_copy(update={"threads": 4}), store, config)
        assert serial.terminal == threaded.terminal

    def test_subordinator_backward(self, options, store, tmp_path):
        config = _config(Command.SIMULATE, tmp_path, seed=5, params=REFERENCE)
        config.simulate.process, config.simulate.direction = ProcessKind.GPP, SimulationDirection.BACKWARD
        config.simulate.paths, config.simulate.steps = 4_000, 3
        report = self._run(options, store, config)
        assert report.terminal.mean == pytest.approx(report.theory.mean, abs=4 * report.terminal.mean_se)
        assert list(pd.read_csv(tmp_path / "simulate_path_0.csv").columns) == ["t", "z"]


class TestPriceCommandHandler:
    def test_closed_call(self, options, store, tmp_path):
        config = _config(Command.PRICE, tmp_path, params=REFERENCE, market=MARKET)
        report = asyncio.run(PriceCommandHandler(store, options).handle(PriceCommand(config)))
        assert report.price == pytest.approx(price_call_closed(REFERENCE, MARKET, 100.0, 1.0))
        assert report.terms_used > 0
        assert report.stderr is None

    def test_closed_and_fft_puts_agree(self, options, store, tmp_path):
        handler = PriceCommandHandler(store, options)
        closed = _config(Command.PRICE, tmp_path, params=REFERENCE, market=MARKET)
        closed.price.put = True
        fft = _config(Command.PRICE, tmp_path, params=REFERENCE, market=MARKET)
        fft.price.put, fft.price.method = True, PriceMethod.FFT
        closed_put = asyncio.run(handler.handle(PriceCommand(closed))).price
        fft_put = asyncio.run(handler.handle(PriceCommand(fft))).price
        assert closed_put == pytest.approx(fft_put, abs=5e-3)

    def test_monte_carlo_reports_stderr(self, options, store, tmp_path):
        config = _config(Command.PRICE, tmp_path, seed=6, params=REFERENCE, market=MARKET)
        config.price.method, config.price.paths = PriceMethod.MC, 20_000
        report = asyncio.run(PriceCommandHandler(store, options).handle(PriceCommand(config)))
        assert report.stderr > 0
        assert abs(report.price - price_call_closed(REFERENCE, MARKET, 100.0, 1.0)) < 4 * report.stderr

    def test_missing_exponential_moment_fails_before_pricing(self, options, store, tmp_path):
        explosive = VGPPParams(theta=5.0, sigma=0.2, a=0.5, alpha=2.0, beta=1.0)
        config = _config(Command.PRICE, tmp_path, params=explosive, market=MARKET)
        with pytest.raises(DomainError):
            asyncio.run(PriceCommandHandler(store, options).handle(PriceCommand(config)))
        assert not (tmp_path / "price.json").exists()


class TestTriangleCommandHandler:
    def test_pricers_agree(self, options, store, tmp_path):
        config = _config(Command.TRIANGLE, tmp_path, seed=7, params=REFERENCE, market=MARKET)
        config.triangle.strikes, config.triangle.maturities, config.triangle.mc_paths = [105.0, 95.0], [1.0], 50_000
        report = asyncio.run(TriangleCommandHandler(store, options).handle(TriangleCommand(config)))
        assert [cell.K for cell in report.cells] == [95.0, 105.0]
        assert report.max_closed_fft_error < 5e-3
        assert report.max_closed_mc_stderrs < 4.0
        assert len(pd.read_csv(tmp_path / report.csv_file)) == 2


class TestCalibrateCommandHandler:
    def test_nlls_from_quote_file(self, options, store, tmp_path):
        quotes = tmp_path / "quotes.csv"
        rows = [
            f"{K},{T},{price_call_closed(REFERENCE, MARKET, K, T, cutoff=1e-10, matrix_form=False)!r}"
            for T in (0.5, 1.0)
            for K in (90.0, 100.0, 110.0)
        ]
        quotes.write_text("K,T,mid\n" + "\n".join(rows) + "\n")
        config = _config(Command.CALIBRATE, tmp_path, seed=8, params=REFERENCE, market=MARKET)
        config.calibrate.method, config.calibrate.quotes_file = CalibrationMethod.NLLS, str(quotes)
        report = asyncio.run(CalibrateCommandHandler(store, options).handle(CalibrateCommand(config)))
        assert report.n_observations == 6
        assert report.rmse < 1e-6
        assert report.p_zero == pytest.approx(REFERENCE.a ** (REFERENCE.alpha / 252.0), rel=1e-2)

    def test_mle_from_price_file(self, options, store, tmp_path):
        steps = np.asarray(vgpp_sample(REFERENCE, 1.0 / 252.0, RngStream(9), 300))
        prices = 50.0 * np.exp(np.concatenate([[0.0], np.cumsum(steps)]))
        dates = pd.bdate_range("2017-01-02", periods=prices.size)
        frame = pd.DataFrame({"date": dates.strftime("%Y-%m-%d"), "price": prices})
        returns = tmp_path / "prices.csv"
        frame.to_csv(returns, index=False)

        config = _config(Command.CALIBRATE, tmp_path, seed=10, params=REFERENCE)
        config.calibrate.method, config.calibrate.returns_file = CalibrationMethod.MLE, str(returns)
        report = asyncio.run(CalibrateCommandHandler(store, options).handle(CalibrateCommand(config)))
        assert report.method is CalibrationMethod.MLE
        assert report.n_observations == 300
        assert 0.0 < report.p_zero < 1.0
        assert report.rmse is None


class TestExoticCommandHandler:
    def test_american_put_sweep(self, options, store, tmp_path):
        config = _config(Command.EXOTIC, tmp_path, seed=11, params=REFERENCE, market=MarketModel(F0=56.0, r=0.05))
        config.exotic.paths, config.exotic.steps, config.exotic.sweep = 10_000, 5, [50.0, 60.0]
        report = asyncio.run(ExoticCommandHandler(store, options).handle(ExoticCommand(config)))
        assert report.price >= 0.0
        assert [point.F0 for point in report.sweep] == [50.0, 60.0]
        for point in report.sweep:
            assert point.price >= point.intrinsic
            assert point.european is not None
        assert len(pd.read_csv(tmp_path / report.csv_file)) == 2

    def test_lookback_ladder_against_vg(self, options, store, tmp_path):
        config = _config(Command.EXOTIC, tmp_path, seed=12, params=REFERENCE, market=MARKET)
        config.exotic.contract = ContractKind.LOOKBACK_CALL_MAX
        config.exotic.K, config.exotic.T = 100.0, 1.0
        config.exotic.paths, config.exotic.steps, config.exotic.step_ladder = 10_000, 4, [1, 2, 4]
        report = asyncio.run(ExoticCommandHandler(store, options).handle(ExoticCommand(config)))
        assert [point.n_steps for point in report.ladder] == [1, 2, 4]
        assert report.vg_params is not None
        vgpp = [point.vgpp_price for point in report.ladder]
        assert vgpp == sorted(vgpp)
        assert report.csv_file is None


class TestMultiSimulateCommandHandler:
    def test_covariance_and_path_file(self, options, store, tmp_path):
        config = _config(Command.MULTISIM, tmp_path, seed=13)
        config.multisim.assets = [AssetLoading(alpha=2.0, c=1.0), AssetLoading(alpha=1.0, c=2.0)]
        config.multisim.paths, config.multisim.steps = 20_000, 4
        report = asyncio.run(MultiSimulateCommandHandler(store, options).handle(MultiSimulateCommand(config)))
        assert np.shape(report.covariance) == (2, 2)
        expected = report.theoretical_covariance[0][1]
        assert report.covariance[0][1] == pytest.approx(expected, rel=0.1)
        assert [m.asset for m in report.marginals] == [1, 2]
        assert list(pd.read_csv(tmp_path / report.path_file).columns) == ["t", "h_1", "h_2"]


class TestMediatorWiring:
    def test_commands_dispatch_through_the_injector(self, tmp_path):
        clear_vgpp_options_cache()
        mediator = create_injector().get(Mediator)
        config = _config(Command.PRICE, tmp_path, params=REFERENCE, market=MARKET)
        report = asyncio.run(mediator.send_async(PriceCommand(config)))
        assert report.price == pytest.approx(price_call_closed(REFERENCE, MARKET, 100.0, 1.0))
        clear_vgpp_options_cache()
