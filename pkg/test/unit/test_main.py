import json
import logging
from dataclasses import asdict
from pathlib import Path

import pytest

from vgpp_pricing.application import global_exception_handler
from vgpp_pricing.domain.config import Command, RunConfig
from vgpp_pricing.domain.errors import NumericalError
from vgpp_pricing.domain.exotics import SimulationDirection
from vgpp_pricing.domain.pricing import MarketModel, price_call_closed, price_call_fft
from vgpp_pricing.domain.reports import (
    CalibrationReport,
    ExoticReport,
    MultiSimulationReport,
    PriceReport,
    ProcessKind,
    SimulationReport,
    TriangleReport,
    report_from_json,
)
from vgpp_pricing.domain.vgpp import VGPPParams
from vgpp_pricing.main import EXIT_NUMERICAL, EXIT_OK, EXIT_USAGE, apply_overrides, build_parser, run

FIXTURES = Path(__file__).parents[1] / "fixtures"


@pytest.fixture
def no_otel(mocker):
    return mocker.patch("vgpp_pricing.main.initialize_opentelemetry")


class TestArgumentParsing:
    def test_help(self):
        assert run(["--help"]) == EXIT_OK

    def test_zero_paths_is_a_usage_error(self):
        assert run(["simulate", "--paths", "0", "--seed", "1"]) == EXIT_USAGE

    def test_calibrate_needs_a_method(self):
        assert run(["calibrate", "--returns", "prices.csv", "--seed", "1"]) == EXIT_USAGE

    def test_unknown_contract(self):
        assert run(["exotic", "--contract", "barrier", "--seed", "1"]) == EXIT_USAGE

    def test_flags_override_the_file(self):
        config = RunConfig(seed=1)
        args = build_parser().parse_args(
            ["simulate", "--seed", "9", "--process", "gpp", "--direction", "backward", "--paths", "500"]
        )
        config = apply_overrides(config, args)
        assert config.command is Command.SIMULATE
        assert config.seed == 9
        assert config.simulate.process is ProcessKind.GPP
        assert config.simulate.direction is SimulationDirection.BACKWARD
        assert config.simulate.paths == 500
        assert config.simulate.steps == 1

    def test_unset_flags_keep_file_values(self):
        config = RunConfig(seed=4, output="kept.json")
        config = apply_overrides(config, build_parser().parse_args(["price", "--strike", "95"]))
        assert config.seed == 4
        assert config.output == "kept.json"
        assert config.price.K == 95.0
        assert config.price.put is False


class TestRun:
    def test_closed_price_succeeds(self, no_otel, tmp_path):
        output = tmp_path / "price.json"
        code = run(["price", "--config", str(FIXTURES / "reference_triangle.json"), "--output", str(output)])
        assert code == EXIT_OK
        no_otel.assert_called_once()
        report = report_from_json(PriceReport, output.read_text())
        assert report.K == 100.0
        assert report.price > 0.0

    def test_missing_seed_is_a_usage_error(self, no_otel, tmp_path):
        fixture = str(FIXTURES / "skewed_simulation.json")
        code = run(["simulate", "--config", fixture, "--output", str(tmp_path / "s.json")])
        assert code == EXIT_USAGE

    def test_unreadable_config_is_a_usage_error(self, no_otel, tmp_path):
        assert run(["price", "--config", str(tmp_path / "absent.json")]) == EXIT_USAGE

    def test_missing_moment_condition_is_a_numerical_failure(self, no_otel, tmp_path):
        config = tmp_path / "run.json"
        config.write_text(
            json.dumps(
                {
                    "params": {"theta": 5.0, "sigma": 0.2, "a": 0.5, "alpha": 2.0, "beta": 1.0},
                    "market": {"F0": 100.0, "r": 0.01},
                }
            )
        )
        assert run(["price", "--config", str(config), "--output", str(tmp_path / "p.json")]) == EXIT_NUMERICAL


class TestGlobalExceptionHandler:
    def test_library_errors_are_logged_with_their_kind(self, mocker, caplog):
        default_hook = mocker.patch("sys.__excepthook__")
        error = NumericalError("series did not converge")
        with caplog.at_level(logging.ERROR, logger="global_exception_handler"):
            global_exception_handler(NumericalError, error, None)
        assert caplog.records[-1].vgpp_error_kind == "numerical"
        default_hook.assert_called_once_with(NumericalError, error, None)

    def test_unexpected_errors_keep_the_traceback(self, mocker, caplog):
        mocker.patch("sys.__excepthook__")
        error = RuntimeError("boom")
        with caplog.at_level(logging.ERROR, logger="global_exception_handler"):
            global_exception_handler(RuntimeError, error, None)
        assert caplog.records[-1].exc_info[1] is error


def _run_in(directory: Path, argv: list[str]) -> Path:
    output = directory / "report.json"
    assert run([*argv, "--output", str(output)]) == EXIT_OK
    return output


def _run_twice(tmp_path: Path, argv: list[str], report_class):
    first = _run_in(tmp_path / "first", argv)
    second = _run_in(tmp_path / "second", argv)
    assert first.read_text() == second.read_text()
    for companion in sorted(first.parent.glob("*.csv")):
        assert companion.read_bytes() == (second.parent / companion.name).read_bytes()
    return report_from_json(report_class, first.read_text()), first.parent


class TestFixtureOutputs:
    def test_simulate(self, no_otel, tmp_path):
        argv = ["simulate", "--config", str(FIXTURES / "skewed_simulation.json"), "--seed", "7", "--paths", "20000"]
        report, directory = _run_twice(tmp_path, argv, SimulationReport)
        assert report.theory.as_tuple() == pytest.approx((0.1025, 0.015907, 1.7398, 7.11923), rel=1e-4)
        assert report.atom_probability == pytest.approx(0.7**5, rel=1e-12)
        assert report.n_paths == 20_000
        assert report.terminal.within(report.theory, n_se=4.0)
        assert (directory / report.path_files[0]).exists()

    def test_multisim(self, no_otel, tmp_path):
        argv = ["multisim", "--config", str(FIXTURES / "multisim.json"), "--seed", "13", "--paths", "5000"]
        report, _ = _run_twice(tmp_path, argv, MultiSimulationReport)
        first, second = report.marginals
        assert (first.theoretical_mean, second.theoretical_mean) == pytest.approx((0.5, 5.0 / 6.0), rel=1e-12)
        assert (first.theoretical_variance, second.theoretical_variance) == pytest.approx((0.125, 15.0 / 36.0))
        assert (first.atom_probability, second.atom_probability) == pytest.approx((0.5**1.5, 0.5**1.25))
        assert report.theoretical_covariance[0][1] == pytest.approx(1.0 / 6.0, rel=1e-12)

    def test_price(self, no_otel, tmp_path):
        report, _ = _run_twice(tmp_path, ["price", "--config", str(FIXTURES / "reference_triangle.json")], PriceReport)
        params = VGPPParams(theta=-0.1436, sigma=0.2, a=0.5, alpha=10.0, beta=5.0)
        market = MarketModel(F0=100.0, r=0.01)
        assert report.omega == pytest.approx(0.12137, abs=1e-3)
        assert report.price == pytest.approx(price_call_closed(params, market, 100.0, 1.0), rel=1e-12)
        assert report.price == pytest.approx(price_call_fft(params, market, [100.0], 1.0)[0], abs=5e-3)

    def test_triangle(self, no_otel, tmp_path):
        argv = ["triangle", "--config", str(FIXTURES / "reference_triangle.json"), "--seed", "11", "--mc-paths", "5000"]
        report, _ = _run_twice(tmp_path, argv, TriangleReport)
        assert len(report.cells) == 15
        assert report.max_closed_fft_error < 5e-3

    def test_calibrate(self, no_otel, tmp_path):
        params = VGPPParams.unit_mean_clock(theta=-0.1436, sigma=0.2, a=0.5, alpha=10.0)
        market = MarketModel(F0=100.0, r=0.01)
        rows = [
            f"{K},{T},{price_call_closed(params, market, K, T, cutoff=1e-10, matrix_form=False)!r}"
            for T in (0.5, 1.0)
            for K in (90.0, 100.0, 110.0)
        ]
        quotes = tmp_path / "quotes.csv"
        quotes.write_text("K,T,mid\n" + "\n".join(rows) + "\n")
        config = tmp_path / "calibrate.json"
        config.write_text(json.dumps({"params": asdict(params), "market": asdict(market)}))

        argv = ["calibrate", "--config", str(config), "--method", "nlls", "--quotes", str(quotes), "--seed", "8"]
        report, _ = _run_twice(tmp_path, argv, CalibrationReport)
        assert report.n_observations == 6
        assert report.rmse < 1e-6

    def test_exotic(self, no_otel, tmp_path):
        fixture = str(FIXTURES / "american_put.json")
        argv = ["exotic", "--config", fixture, "--seed", "3", "--paths", "10000", "--steps", "5", "--sweep", "50", "60"]
        report, _ = _run_twice(tmp_path, argv, ExoticReport)
        assert [point.F0 for point in report.sweep] == [50.0, 60.0]
        for point in report.sweep:
            assert point.price >= max(point.intrinsic, point.european)
