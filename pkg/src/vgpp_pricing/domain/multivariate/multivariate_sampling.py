"""Coupled simulation of the common-factor Gamma++ subordinator and the VG++ processes it drives.

Stream layout under the caller's ``rng``: substream 0 drives the common factor, substream 1 + i the
idiosyncratic clock of asset i, substream 1 + n_assets + i the Brownian layer of asset i.
"""

import logging
from collections.abc import Sequence

import numpy as np
from numpy.typing import ArrayLike

from vgpp_pricing.domain.distributions import RngStream, normal_sample
from vgpp_pricing.domain.errors import DomainError
from vgpp_pricing.domain.gammapp import SamplePath, gpp_path_forward, validate_grid
from vgpp_pricing.domain.multivariate.multi_gpp_params import BrownianLayer, MultiGPPParams

_logger = logging.getLogger("multivariate_sampling")


def sample_multivariate_subordinator(
    params: MultiGPPParams, grid: ArrayLike, rng: RngStream, n_paths: int = 1
) -> list[SamplePath]:
    """One path batch per asset with ``z_values`` holding H_i = X_i + c_i Z on the grid."""
    times = validate_grid(grid)
    if n_paths < 1:
        raise DomainError("n_paths must be at least 1")

    common = gpp_path_forward(params.common, times, rng.substream(0), n_paths).z_values
    batches = []
    for i, asset in enumerate(params.assets):
        law = params.idiosyncratic(i)
        own = (
            np.zeros_like(common)
            if law is None
            else gpp_path_forward(law, times, rng.substream(1 + i), n_paths).z_values
        )
        batches.append(SamplePath(grid=times, z_values=own + asset.c * common, x_values=None, seed_info=rng.seed_info))

    _logger.debug(
        f"Multivariate Gamma++ batch: {params.n_assets} assets, {n_paths} paths, {times.size} grid points",
        extra={"vgpp_assets": params.n_assets, "vgpp_paths": n_paths},
    )
    return batches


def sample_multivariate_vgpp(
    params: MultiGPPParams,
    layers: Sequence[BrownianLayer],
    grid: ArrayLike,
    rng: RngStream,
    n_paths: int = 1,
) -> list[SamplePath]:
    """X_i = theta_i H_i + sigma_i W_i(H_i) with independent Brownian motions W_i.

    Extension beyond the subordinator construction; no pricing result is attached to it.
    """
    if len(layers) != params.n_assets:
        raise DomainError(f"expected {params.n_assets} Brownian layers, got {len(layers)}")

    batches = []
    for i, (clock, layer) in enumerate(zip(sample_multivariate_subordinator(params, grid, rng, n_paths), layers)):
        dh = np.diff(clock.z_values, axis=1)
        dx = np.where(
            dh > 0,
            normal_sample(layer.theta * dh, layer.sigma * layer.sigma * dh, rng.substream(1 + params.n_assets + i)),
            0.0,
        )
        x_values = np.concatenate([np.zeros((clock.n_paths, 1)), np.cumsum(dx, axis=1)], axis=1)
        batches.append(
            SamplePath(grid=clock.grid, z_values=clock.z_values, x_values=x_values, seed_info=clock.seed_info)
        )
    return batches
