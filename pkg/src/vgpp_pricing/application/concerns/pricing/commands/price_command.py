import logging

from injector import inject
from mediatr import GenericQuery, Mediator

from vgpp_pricing.domain.config import RunConfig, VgppOptions
from vgpp_pricing.domain.distributions import RngStream
from vgpp_pricing.domain.pricing import (
    price_call_closed_detail,
    price_call_fft,
    price_calls_mc,
    price_put_fft,
    vgpp_omega,
)
from vgpp_pricing.domain.reports import PriceMethod, PriceReport
from vgpp_pricing.infrastructure.services import IArtifactStore


class PriceCommand(GenericQuery[PriceReport]):
    """Command to price one European option."""

    def __init__(self, config: RunConfig):
        self.config = config


@Mediator.handler
class PriceCommandHandler:
    """Command handler for the PriceCommand."""

    @inject
    def __init__(self, artifact_store: IArtifactStore, vgpp_options: VgppOptions):
        self.artifact_store = artifact_store
        self.vgpp_options = vgpp_options
        self.logger = logging.getLogger("price_command_handler")

    async def handle(self, request: PriceCommand) -> PriceReport:
        config = request.config
        settings = config.price
        params, market = config.params, config.market
        assert params is not None and market is not None
        K, T = settings.K, settings.T

        # omega first, so a missing moment condition fails before any pricing work
        omega = vgpp_omega(params)
        stderr = None
        terms_used = None

        if settings.method is PriceMethod.CLOSED:
            detail = price_call_closed_detail(params, market, K, T, self.vgpp_options.series_cutoff)
            price = max(detail.price - market.F0 + K * market.discount(T), 0.0) if settings.put else detail.price
            terms_used = detail.terms_used
        elif settings.method is PriceMethod.FFT:
            pricer = price_put_fft if settings.put else price_call_fft
            price = float(pricer(params, market, [K], T, self.vgpp_options.fft_config())[0])
        else:
            assert config.seed is not None
            result = price_calls_mc(
                params,
                market,
                [K],
                T,
                settings.paths,
                RngStream(config.seed),
                self.vgpp_options.threads,
                self.vgpp_options.mc_chunk_size,
                put=settings.put,
            )[0]
            price, stderr = result.price, result.stderr

        self.logger.info(
            f"{'Put' if settings.put else 'Call'} K={K}, T={T} ({settings.method.value}): {price:.6f}",
            extra={"vgpp_command": "price", "vgpp_method": settings.method.value, "vgpp_price": price},
        )
        report = PriceReport(
            method=settings.method,
            params=params,
            market=market,
            K=K,
            T=T,
            put=settings.put,
            price=price,
            omega=omega,
            stderr=stderr,
            terms_used=terms_used,
        )
        await self.artifact_store.write_report(config.output, report)
        return report
