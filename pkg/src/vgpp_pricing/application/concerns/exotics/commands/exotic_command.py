import logging
import os
from dataclasses import asdict

import pandas as pd
from injector import inject
from mediatr import GenericQuery, Mediator

from vgpp_pricing.domain.config import RunConfig, VgppOptions
from vgpp_pricing.domain.distributions import RngStream
from vgpp_pricing.domain.exotics import (
    LSMCConfig,
    moment_matched_vg,
    price_american_put_lsmc,
    price_lookback_call_max,
    price_lookback_ladder,
)
from vgpp_pricing.domain.pricing import MarketModel, MCPrice, price_put_closed
from vgpp_pricing.domain.reports import ContractKind, ExoticPoint, ExoticReport, LadderPoint
from vgpp_pricing.domain.vgpp import VGPPParams
from vgpp_pricing.infrastructure.services import IArtifactStore


class ExoticCommand(GenericQuery[ExoticReport]):
    """Command to price an American put or a discretely monitored lookback call."""

    def __init__(self, config: RunConfig):
        self.config = config


@Mediator.handler
class ExoticCommandHandler:
    """Command handler for the ExoticCommand."""

    @inject
    def __init__(self, artifact_store: IArtifactStore, vgpp_options: VgppOptions):
        self.artifact_store = artifact_store
        self.vgpp_options = vgpp_options
        self.logger = logging.getLogger("exotic_command_handler")

    def _price(
        self,
        contract: ContractKind,
        params: VGPPParams,
        market: MarketModel,
        K: float,
        T: float,
        cfg: LSMCConfig,
        rng: RngStream,
    ) -> MCPrice:
        if contract is ContractKind.AMERICAN_PUT:
            return price_american_put_lsmc(params, market, K, T, cfg, rng)
        return price_lookback_call_max(
            params,
            market,
            K,
            T,
            cfg.n_steps,
            cfg.n_paths,
            rng,
            self.vgpp_options.threads,
            self.vgpp_options.mc_chunk_size,
        )

    async def handle(self, request: ExoticCommand) -> ExoticReport:
        config = request.config
        settings = config.exotic
        params, market = config.params, config.market
        assert params is not None and market is not None and config.seed is not None
        cfg = LSMCConfig(
            n_paths=settings.paths,
            n_steps=settings.steps,
            basis_degree=settings.basis_degree,
            direction=settings.direction,
        )
        rng = RngStream(config.seed)
        headline = self._price(settings.contract, params, market, settings.K, settings.T, cfg, rng.substream(0))

        # --------------------------------------------------------
        # Sweep over starting forwards, one substream per point
        # --------------------------------------------------------
        sweep = []
        for k, F0 in enumerate(settings.sweep, start=1):
            point_market = MarketModel(F0=F0, r=market.r)
            result = self._price(
                settings.contract, params, point_market, settings.K, settings.T, cfg, rng.substream(k)
            )
            put = settings.contract is ContractKind.AMERICAN_PUT
            european = (
                price_put_closed(params, point_market, settings.K, settings.T, self.vgpp_options.series_cutoff)
                if put and settings.european
                else None
            )
            intrinsic = max(settings.K - F0, 0.0) if put else max(F0 - settings.K, 0.0)
            sweep.append(
                ExoticPoint(F0=F0, price=result.price, stderr=result.stderr, intrinsic=intrinsic, european=european)
            )

        # --------------------------------------------------------
        # VG++ against its moment-matched VG over the monitoring ladder, on common streams
        # --------------------------------------------------------
        ladder = []
        vg_params = None
        if settings.contract is ContractKind.LOOKBACK_CALL_MAX and settings.step_ladder:
            vg_params = moment_matched_vg(params)
            ladder_rng = rng.substream(len(settings.sweep) + 1)
            workers, chunk = self.vgpp_options.threads, self.vgpp_options.mc_chunk_size
            K, T, ladder_steps, n_paths = settings.K, settings.T, settings.step_ladder, settings.paths
            vgpp_prices = price_lookback_ladder(params, market, K, T, ladder_steps, n_paths, ladder_rng, workers, chunk)
            vg_prices = price_lookback_ladder(
                vg_params, market, K, T, ladder_steps, n_paths, ladder_rng, workers, chunk
            )
            ladder = [
                LadderPoint(
                    n_steps=steps,
                    vgpp_price=vgpp.price,
                    vgpp_stderr=vgpp.stderr,
                    vg_price=vg.price,
                    vg_stderr=vg.stderr,
                )
                for steps, vgpp, vg in zip(settings.step_ladder, vgpp_prices, vg_prices)
            ]

        csv_file = None
        if sweep:
            csv_file = f"{os.path.splitext(config.output)[0]}_sweep.csv"
            await self.artifact_store.write_frame(csv_file, pd.DataFrame([asdict(p) for p in sweep]))

        self.logger.info(
            f"{settings.contract.value} K={settings.K}, T={settings.T}: {headline.price:.6f} +- {headline.stderr:.6f}",
            extra={
                "vgpp_command": "exotic",
                "vgpp_contract": settings.contract.value,
                "vgpp_seed": config.seed,
                "vgpp_direction": settings.direction.value,
            },
        )
        report = ExoticReport(
            contract=settings.contract,
            params=params,
            market=market,
            K=settings.K,
            T=settings.T,
            config=cfg,
            seed=config.seed,
            price=headline.price,
            stderr=headline.stderr,
            sweep=sweep,
            vg_params=vg_params,
            ladder=ladder,
            csv_file=None if csv_file is None else os.path.basename(csv_file),
        )
        await self.artifact_store.write_report(config.output, report)
        return report
