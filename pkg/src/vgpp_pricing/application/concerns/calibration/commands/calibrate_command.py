import logging

from injector import inject
from mediatr import GenericQuery, Mediator

from vgpp_pricing.domain.calibration import CalibrationMethod, gmm_fit, mle_fit, nlls_fit
from vgpp_pricing.domain.config import RunConfig, VgppOptions
from vgpp_pricing.domain.reports import CalibrationReport
from vgpp_pricing.infrastructure.services import IArtifactStore


class CalibrateCommand(GenericQuery[CalibrationReport]):
    """Command to calibrate VG++ parameters to returns (mle, gmm) or to option quotes (nlls)."""

    def __init__(self, config: RunConfig):
        self.config = config


@Mediator.handler
class CalibrateCommandHandler:
    """Command handler for the CalibrateCommand."""

    @inject
    def __init__(self, artifact_store: IArtifactStore, vgpp_options: VgppOptions):
        self.artifact_store = artifact_store
        self.vgpp_options = vgpp_options
        self.logger = logging.getLogger("calibrate_command_handler")

    async def handle(self, request: CalibrateCommand) -> CalibrationReport:
        config = request.config
        settings = config.calibrate
        init = settings.init or config.params
        assert init is not None and config.seed is not None and settings.method is not None
        starts = self.vgpp_options.calibration_starts
        workers = self.vgpp_options.threads

        if settings.method is CalibrationMethod.NLLS:
            assert settings.quotes_file is not None and config.market is not None
            quotes = await self.artifact_store.load_quote_set(settings.quotes_file, config.market)
            result = nlls_fit(
                quotes,
                init,
                pricer=settings.pricer,
                fft_cfg=self.vgpp_options.fft_config(),
                n_starts=starts,
                workers=workers,
                seed=config.seed,
                dt=settings.dt,
            )
            n_observations = len(quotes.quotes)
        else:
            assert settings.returns_file is not None
            series = await self.artifact_store.load_return_series(settings.returns_file, settings.dt)
            if settings.method is CalibrationMethod.MLE:
                result = mle_fit(series, init, n_starts=starts, workers=workers, seed=config.seed)
            else:
                result = gmm_fit(
                    series, init, weighting=settings.weighting, n_starts=starts, workers=workers, seed=config.seed
                )
            n_observations = series.increments.size

        report = CalibrationReport.from_result(result, n_observations, config.seed)
        self.logger.info(
            f"Liquidity probability p_zero = {report.p_zero:.6f} ({settings.method.value}, "
            f"converged={report.converged}, {len(report.diagnostics)} diagnostic flag(s))",
            extra={
                "vgpp_command": "calibrate",
                "vgpp_method": settings.method.value,
                "vgpp_p_zero": report.p_zero,
                "vgpp_seed": config.seed,
            },
        )
        for flag in report.diagnostics:
            self.logger.warning(f"Calibration diagnostic: {flag}", extra={"vgpp_diagnostic": flag})

        await self.artifact_store.write_report(config.output, report)
        return report
