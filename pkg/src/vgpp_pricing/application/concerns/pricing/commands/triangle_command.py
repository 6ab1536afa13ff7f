import logging
import os
from dataclasses import asdict

import numpy as np
import pandas as pd
from injector import inject
from mediatr import GenericQuery, Mediator

from vgpp_pricing.domain.config import RunConfig, VgppOptions
from vgpp_pricing.domain.distributions import RngStream
from vgpp_pricing.domain.pricing import price_call_closed, price_call_fft, price_calls_mc, vgpp_omega
from vgpp_pricing.domain.reports import TriangleCell, TriangleReport
from vgpp_pricing.infrastructure.services import IArtifactStore


class TriangleCommand(GenericQuery[TriangleReport]):
    """Command to price a strike by maturity grid with all three pricers and compare them."""

    def __init__(self, config: RunConfig):
        self.config = config


@Mediator.handler
class TriangleCommandHandler:
    """Command handler for the TriangleCommand."""

    @inject
    def __init__(self, artifact_store: IArtifactStore, vgpp_options: VgppOptions):
        self.artifact_store = artifact_store
        self.vgpp_options = vgpp_options
        self.logger = logging.getLogger("triangle_command_handler")

    async def handle(self, request: TriangleCommand) -> TriangleReport:
        config = request.config
        settings = config.triangle
        params, market = config.params, config.market
        assert params is not None and market is not None and config.seed is not None
        vgpp_omega(params)

        rng = RngStream(config.seed)
        strikes = sorted(settings.strikes)
        cells = []
        for j, T in enumerate(sorted(settings.maturities)):
            # one substream per maturity; all strikes of a maturity share the terminal draws
            fft = price_call_fft(params, market, strikes, T, self.vgpp_options.fft_config())
            mc = price_calls_mc(
                params,
                market,
                strikes,
                T,
                settings.mc_paths,
                rng.substream(j),
                self.vgpp_options.threads,
                self.vgpp_options.mc_chunk_size,
            )
            for K, fft_price, mc_price in zip(strikes, fft, mc):
                closed = price_call_closed(params, market, K, T, self.vgpp_options.series_cutoff)
                cells.append(
                    TriangleCell(
                        K=K,
                        T=T,
                        closed=closed,
                        fft=float(fft_price),
                        mc=mc_price.price,
                        mc_stderr=mc_price.stderr,
                        closed_fft_error=abs(closed - float(fft_price)),
                        closed_mc_error=abs(closed - mc_price.price),
                        fft_mc_error=abs(float(fft_price) - mc_price.price),
                    )
                )

        csv_file = f"{os.path.splitext(config.output)[0]}_triangle.csv"
        await self.artifact_store.write_frame(csv_file, pd.DataFrame([asdict(c) for c in cells]))

        max_closed_fft = max(c.closed_fft_error for c in cells)
        max_closed_mc = max(c.closed_mc_error / c.mc_stderr if c.mc_stderr > 0 else np.inf for c in cells)
        self.logger.info(
            f"Pricer triangle: max |closed - FFT| = {max_closed_fft:.3e}, "
            f"max |closed - MC| = {max_closed_mc:.2f} stderr",
            extra={"vgpp_command": "triangle", "vgpp_seed": config.seed, "vgpp_cells": len(cells)},
        )
        report = TriangleReport(
            params=params,
            market=market,
            seed=config.seed,
            mc_paths=settings.mc_paths,
            cells=cells,
            max_closed_fft_error=max_closed_fft,
            max_closed_mc_stderrs=float(max_closed_mc),
            csv_file=os.path.basename(csv_file),
        )
        await self.artifact_store.write_report(config.output, report)
        return report
