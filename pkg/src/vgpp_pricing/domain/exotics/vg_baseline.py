"""Plain Variance Gamma simulation, the atom-free baseline for the exotic comparisons."""

import numpy as np
from numpy.typing import ArrayLike, NDArray

from vgpp_pricing.domain.distributions import RngStream, gamma_sample, normal_sample, partitioned_map
from vgpp_pricing.domain.distributions.base_samplers import Size
from vgpp_pricing.domain.errors import DomainError
from vgpp_pricing.domain.exotics.vg_params import VGParams, vg_market_omega
from vgpp_pricing.domain.gammapp import SamplePath, validate_grid
from vgpp_pricing.domain.pricing import DEFAULT_CHUNK_SIZE, MIN_PATHS, MarketModel, MCPrice, estimate


def _vg_increments(params: VGParams, dt: float, rng: RngStream, n_draws: int) -> tuple[NDArray, NDArray]:
    dg = np.asarray(gamma_sample(params.alpha * dt, params.beta, rng, n_draws))
    dx = np.asarray(normal_sample(params.theta * dg, params.sigma * params.sigma * dg, rng))
    return dg, dx


def vg_sample(params: VGParams, t: float, rng: RngStream, size: Size = None) -> float | NDArray:
    if not t > 0:
        raise DomainError(f"t must be positive, got {t}")
    n_draws = 1 if size is None else int(np.prod(size))
    _, dx = _vg_increments(params, t, rng, n_draws)
    return float(dx[0]) if size is None else dx.reshape(size)


def vg_path_forward(params: VGParams, grid: ArrayLike, rng: RngStream, n_paths: int = 1) -> SamplePath:
    times = validate_grid(grid)
    dg = np.zeros((n_paths, times.size))
    dx = np.zeros((n_paths, times.size))
    for i, step in enumerate(np.diff(times), start=1):
        dg[:, i], dx[:, i] = _vg_increments(params, step, rng, n_paths)
    return SamplePath(
        grid=times, z_values=np.cumsum(dg, axis=1), x_values=np.cumsum(dx, axis=1), seed_info=rng.seed_info
    )


def price_european_vg_mc(
    params: VGParams,
    market: MarketModel,
    K: float,
    T: float,
    n_paths: int,
    rng: RngStream,
    workers: int = 1,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    put: bool = False,
) -> MCPrice:
    """European option under F(T) = F0 exp((r + omega) T + X(T)) with a VG driver."""
    if n_paths < MIN_PATHS:
        raise DomainError(f"n_paths must be at least {MIN_PATHS}, got {n_paths}")
    if not K > 0 or not T > 0:
        raise DomainError("K and T must be positive")
    omega = vg_market_omega(params)

    chunks = partitioned_map(
        lambda size, stream: np.asarray(vg_sample(params, T, stream, size)), n_paths, rng, chunk_size, workers
    )
    forwards = market.F0 * np.exp((market.r + omega) * T + np.concatenate(chunks))
    payoff = np.maximum(K - forwards, 0.0) if put else np.maximum(forwards - K, 0.0)
    return estimate(market.discount(T) * payoff)
