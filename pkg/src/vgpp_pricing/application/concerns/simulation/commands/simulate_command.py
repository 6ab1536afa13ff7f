import logging
import os
from collections.abc import Callable

import numpy as np
import pandas as pd
from injector import inject
from mediatr import GenericQuery, Mediator

from vgpp_pricing.domain.config import RunConfig, VgppOptions
from vgpp_pricing.domain.distributions import RngStream, partitioned_map
from vgpp_pricing.domain.exotics import SimulationDirection
from vgpp_pricing.domain.gammapp import SamplePath, gpp_cumulants, gpp_path_backward, gpp_path_forward
from vgpp_pricing.domain.reports import MomentSummary, ProcessKind, SimulationReport
from vgpp_pricing.domain.vgpp import VGPPParams, sample_moments, vgpp_moments, vgpp_path_backward, vgpp_path_forward
from vgpp_pricing.infrastructure.services import IArtifactStore


class SimulateCommand(GenericQuery[SimulationReport]):
    """Command to simulate a path batch of the Gamma++ clock or the VG++ process."""

    def __init__(self, config: RunConfig):
        self.config = config


def _theory(process: ProcessKind, params: VGPPParams, horizon: float) -> MomentSummary:
    if process is ProcessKind.VGPP:
        return MomentSummary.from_theory(vgpp_moments(params, horizon))
    c1, c2, c3, c4 = (gpp_cumulants(params.subordinator, horizon, n) for n in range(1, 5))
    return MomentSummary.from_theory((c1, c2, c3 / c2**1.5, 3.0 + c4 / c2**2))


def _simulate(
    process: ProcessKind, direction: SimulationDirection, params: VGPPParams, grid: np.ndarray
) -> Callable[[int, RngStream], SamplePath]:
    if process is ProcessKind.GPP:
        sampler = gpp_path_forward if direction is SimulationDirection.FORWARD else gpp_path_backward
        return lambda size, stream: sampler(params.subordinator, grid, stream, size)
    sampler = vgpp_path_forward if direction is SimulationDirection.FORWARD else vgpp_path_backward
    return lambda size, stream: sampler(params, grid, stream, size)


def path_frame(batch: SamplePath, index: int) -> pd.DataFrame:
    """One trajectory as a `t,z` (or `t,z,x`) frame, one row per grid point."""
    frame = pd.DataFrame({"t": batch.grid, "z": batch.z_values[index]})
    if batch.x_values is not None:
        frame["x"] = batch.x_values[index]
    return frame


@Mediator.handler
class SimulateCommandHandler:
    """Command handler for the SimulateCommand."""

    @inject
    def __init__(self, artifact_store: IArtifactStore, vgpp_options: VgppOptions):
        self.artifact_store = artifact_store
        self.vgpp_options = vgpp_options
        self.logger = logging.getLogger("simulate_command_handler")

    async def handle(self, request: SimulateCommand) -> SimulationReport:
        config = request.config
        settings = config.simulate
        assert config.params is not None and config.seed is not None
        grid = np.linspace(0.0, settings.horizon, settings.steps + 1)

        self.logger.info(
            f"Simulating {settings.paths} {settings.process.value} paths ({settings.direction.value})",
            extra={
                "vgpp_command": "simulate",
                "vgpp_seed": config.seed,
                "vgpp_paths": settings.paths,
                "vgpp_direction": settings.direction.value,
            },
        )

        # --------------------------------------------------------
        # Simulate in fixed chunks so the worker count never changes the draws
        # --------------------------------------------------------
        batches = partitioned_map(
            _simulate(settings.process, settings.direction, config.params, grid),
            settings.paths,
            RngStream(config.seed),
            self.vgpp_options.mc_chunk_size,
            self.vgpp_options.threads,
        )

        values = np.concatenate(
            [b.terminal_x if settings.process is ProcessKind.VGPP else b.terminal_z for b in batches]
        )
        zero_steps = sum(int(np.count_nonzero(np.diff(b.z_values, axis=1) == 0)) for b in batches)
        zero_fraction = zero_steps / (settings.paths * settings.steps)

        # --------------------------------------------------------
        # Write the leading trajectories as CSV next to the report
        # --------------------------------------------------------
        stem = os.path.splitext(config.output)[0]
        path_files = []
        written = 0
        for batch in batches:
            for i in range(min(batch.n_paths, settings.save_paths - written)):
                file_path = f"{stem}_path_{written}.csv"
                await self.artifact_store.write_frame(file_path, path_frame(batch, i))
                path_files.append(os.path.basename(file_path))
                written += 1
            if written >= settings.save_paths:
                break

        report = SimulationReport(
            process=settings.process,
            direction=settings.direction,
            params=config.params,
            seed=config.seed,
            n_paths=settings.paths,
            horizon=settings.horizon,
            n_steps=settings.steps,
            terminal=MomentSummary.from_sample(sample_moments(values)),
            theory=_theory(settings.process, config.params, settings.horizon),
            zero_increment_fraction=zero_fraction,
            atom_probability=config.params.subordinator.atom(settings.horizon / settings.steps),
            path_files=path_files,
        )
        await self.artifact_store.write_report(config.output, report)
        return report
