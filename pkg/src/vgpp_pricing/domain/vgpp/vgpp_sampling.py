"""Simulation of the VG++ process by Brownian motion on a Gamma++ clock.

A zero clock increment always yields an exactly zero process increment.
"""

import logging
from collections.abc import Iterator

import numpy as np
from numpy.typing import ArrayLike, NDArray

from vgpp_pricing.domain.distributions import RngStream, gamma_sample, normal_sample, polya_sample
from vgpp_pricing.domain.distributions.base_samplers import Size
from vgpp_pricing.domain.errors import DomainError
from vgpp_pricing.domain.gammapp import SamplePath, backward_slices, gpp_sample_polya_with_counts, validate_grid
from vgpp_pricing.domain.vgpp.slice_ledger import SliceLedger
from vgpp_pricing.domain.vgpp.vgpp_laws import compound_rates
from vgpp_pricing.domain.vgpp.vgpp_params import VGPPParams

_logger = logging.getLogger("vgpp_sampling")


def _draw_count(size: Size) -> int:
    return 1 if size is None else int(np.prod(size))


def _shaped(values: NDArray, size: Size) -> float | NDArray:
    return float(values[0]) if size is None else values.reshape(size)


def subordinated_normal(params: VGPPParams, dz: NDArray, rng: RngStream) -> NDArray:
    """Normal(theta dz, sigma^2 dz) on every entry, exactly 0 where dz = 0."""
    draws = normal_sample(params.theta * dz, params.sigma * params.sigma * dz, rng)
    return np.where(dz > 0, draws, 0.0)


def vgpp_sample(params: VGPPParams, t: float, rng: RngStream, size: Size = None) -> float | NDArray:
    """X(t) drawn as theta Z(t) + sigma W(Z(t)) with Z(t) from the Polya-mixture sampler."""
    dz, _ = gpp_sample_polya_with_counts(params.subordinator, t, rng, _draw_count(size))
    return _shaped(subordinated_normal(params, dz, rng), size)


def vgpp_sample_compound(params: VGPPParams, t: float, rng: RngStream, size: Size = None) -> float | NDArray:
    """Polya sum: S ~ Polya(alpha t, 1 - a) pairs I_k - J_k with I_k ~ Exp(tbeta_p), J_k ~ Exp(tbeta_n).

    The S exponential draws on each side are summed as one Gamma(S, rate) draw.
    """
    if not t > 0:
        raise DomainError(f"t must be positive, got {t}")
    tbeta_p, tbeta_n = compound_rates(params)
    counts = np.asarray(polya_sample(params.subordinator.counter(t), rng, _draw_count(size)))

    values = np.zeros(counts.shape)
    jumped = counts > 0
    if np.any(jumped):
        up = gamma_sample(counts[jumped], tbeta_p, rng)
        down = gamma_sample(counts[jumped], tbeta_n, rng)
        values[jumped] = up - down
    return _shaped(values, size)


def vgpp_path_forward(params: VGPPParams, grid: ArrayLike, rng: RngStream, n_paths: int = 1) -> SamplePath:
    """Independent (dZ, dX) increments on every grid interval, cumulated from zero."""
    times = validate_grid(grid)
    if n_paths < 1:
        raise DomainError("n_paths must be at least 1")

    dz = np.zeros((n_paths, times.size))
    dx = np.zeros((n_paths, times.size))
    for i, step in enumerate(np.diff(times), start=1):
        dz[:, i], _ = gpp_sample_polya_with_counts(params.subordinator, step, rng, n_paths)
        dx[:, i] = subordinated_normal(params, dz[:, i], rng)

    return SamplePath(
        grid=times,
        z_values=np.cumsum(dz, axis=1),
        x_values=np.cumsum(dx, axis=1),
        seed_info=rng.seed_info,
    )


def backward_process_slices(
    params: VGPPParams, grid: ArrayLike, rng: RngStream, n_paths: int = 1, ledger: SliceLedger | None = None
) -> Iterator[tuple[int, NDArray, NDArray]]:
    """Yield (grid index, Z slice, X slice) from the terminal time down to zero.

    X at an interior time is a Brownian bridge on the clock between zero and the point to its right:
    Normal(x_r z / z_r, sigma^2 z (z_r - z) / z_r). A zero clock forces a zero process value.
    Only the yielded slice and its right neighbour are alive; ``ledger`` records them.
    """
    sigma2 = params.sigma * params.sigma
    x_right: NDArray | None = None
    z_right: NDArray | None = None

    for i, z_slice in backward_slices(params.subordinator, grid, rng, n_paths):
        if x_right is None or z_right is None:
            x_slice = subordinated_normal(params, z_slice, rng)
        else:
            with np.errstate(divide="ignore", invalid="ignore"):
                ratio = np.where(z_right > 0, z_slice / z_right, 0.0)
            mean = x_right * ratio
            variance = np.maximum(sigma2 * z_slice * (1.0 - ratio), 0.0)
            x_slice = np.where(z_slice > 0, normal_sample(mean, variance, rng), 0.0)
        if ledger is not None:
            ledger.allocate()
        yield i, z_slice, x_slice
        if ledger is not None and x_right is not None:
            ledger.release()
        z_right, x_right = z_slice, x_slice

    if ledger is not None and x_right is not None:
        ledger.release()


def vgpp_path_backward(params: VGPPParams, grid: ArrayLike, rng: RngStream, n_paths: int = 1) -> SamplePath:
    """Backward Gamma++ clock path with the Brownian layer bridged on the clock."""
    times = validate_grid(grid)
    z_values = np.zeros((n_paths, times.size))
    x_values = np.zeros((n_paths, times.size))
    for i, z_slice, x_slice in backward_process_slices(params, times, rng, n_paths):
        z_values[:, i] = z_slice
        x_values[:, i] = x_slice

    _logger.debug(
        f"Backward VG++ batch of {n_paths} paths on {times.size} grid points",
        extra={"vgpp_paths": n_paths, "vgpp_grid_points": times.size},
    )
    return SamplePath(grid=times, z_values=z_values, x_values=x_values, seed_info=rng.seed_info)
