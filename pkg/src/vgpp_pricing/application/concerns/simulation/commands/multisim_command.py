import logging
import os

import numpy as np
import pandas as pd
from injector import inject
from mediatr import GenericQuery, Mediator

from vgpp_pricing.domain.config import RunConfig, VgppOptions
from vgpp_pricing.domain.distributions import RngStream, partitioned_map
from vgpp_pricing.domain.gammapp import SamplePath, gpp_cumulants
from vgpp_pricing.domain.multivariate import (
    MultiGPPParams,
    marginal_params,
    sample_multivariate_subordinator,
    sample_multivariate_vgpp,
)
from vgpp_pricing.domain.reports import MarginalSummary, MultiSimulationReport
from vgpp_pricing.infrastructure.services import IArtifactStore


class MultiSimulateCommand(GenericQuery[MultiSimulationReport]):
    """Command to simulate the common-factor multivariate subordinator."""

    def __init__(self, config: RunConfig):
        self.config = config


def multi_path_frame(batches: list[SamplePath], index: int) -> pd.DataFrame:
    """Trajectory ``index`` of every asset as `t,h_1,...,h_n` plus `x_i` columns when present."""
    frame = pd.DataFrame({"t": batches[0].grid})
    for i, batch in enumerate(batches, start=1):
        frame[f"h_{i}"] = batch.z_values[index]
    for i, batch in enumerate(batches, start=1):
        if batch.x_values is not None:
            frame[f"x_{i}"] = batch.x_values[index]
    return frame


@Mediator.handler
class MultiSimulateCommandHandler:
    """Command handler for the MultiSimulateCommand."""

    @inject
    def __init__(self, artifact_store: IArtifactStore, vgpp_options: VgppOptions):
        self.artifact_store = artifact_store
        self.vgpp_options = vgpp_options
        self.logger = logging.getLogger("multisim_command_handler")

    async def handle(self, request: MultiSimulateCommand) -> MultiSimulationReport:
        config = request.config
        settings = config.multisim
        assert config.seed is not None
        params = MultiGPPParams(
            a=settings.a, alpha_common=settings.alpha_common, beta=settings.beta, assets=tuple(settings.assets)
        )
        grid = np.linspace(0.0, settings.horizon, settings.steps + 1)

        def task(size: int, stream: RngStream) -> list[SamplePath]:
            if settings.layers:
                return sample_multivariate_vgpp(params, settings.layers, grid, stream, size)
            return sample_multivariate_subordinator(params, grid, stream, size)

        chunks = partitioned_map(
            task, settings.paths, RngStream(config.seed), self.vgpp_options.mc_chunk_size, self.vgpp_options.threads
        )
        terminals = np.stack(
            [np.concatenate([chunk[i].terminal_z for chunk in chunks]) for i in range(params.n_assets)]
        )

        # --------------------------------------------------------
        # Marginal laws and the common-factor covariance c_i c_j Var[Z(T)]
        # --------------------------------------------------------
        dt = settings.horizon / settings.steps
        marginals = []
        for i in range(params.n_assets):
            law = marginal_params(params, i)
            zero_steps = sum(int(np.count_nonzero(np.diff(chunk[i].z_values, axis=1) == 0)) for chunk in chunks)
            marginals.append(
                MarginalSummary(
                    asset=i + 1,
                    mean=float(terminals[i].mean()),
                    variance=float(terminals[i].var(ddof=1)),
                    theoretical_mean=gpp_cumulants(law, settings.horizon, 1),
                    theoretical_variance=gpp_cumulants(law, settings.horizon, 2),
                    zero_increment_fraction=zero_steps / (settings.paths * settings.steps),
                    atom_probability=law.atom(dt),
                )
            )

        common_variance = gpp_cumulants(params.common, settings.horizon, 2)
        loadings = np.array([asset.c for asset in params.assets])
        theoretical = np.outer(loadings, loadings) * common_variance
        np.fill_diagonal(theoretical, [m.theoretical_variance for m in marginals])
        covariance = np.atleast_2d(np.cov(terminals, ddof=1))

        path_file = f"{os.path.splitext(config.output)[0]}_paths.csv"
        await self.artifact_store.write_frame(path_file, multi_path_frame(chunks[0], 0))

        self.logger.info(
            f"Simulated {params.n_assets} coupled assets on {settings.paths} paths",
            extra={"vgpp_command": "multisim", "vgpp_seed": config.seed, "vgpp_assets": params.n_assets},
        )
        report = MultiSimulationReport(
            seed=config.seed,
            n_paths=settings.paths,
            horizon=settings.horizon,
            n_steps=settings.steps,
            marginals=marginals,
            covariance=covariance.tolist(),
            theoretical_covariance=theoretical.tolist(),
            path_file=os.path.basename(path_file),
        )
        await self.artifact_store.write_report(config.output, report)
        return report
