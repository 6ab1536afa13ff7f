import logging

import numpy as np
from numpy.typing import NDArray

from vgpp_pricing.domain.distributions import RngStream, partitioned_map
from vgpp_pricing.domain.errors import DomainError
from vgpp_pricing.domain.exotics.vg_baseline import vg_path_forward
from vgpp_pricing.domain.exotics.vg_params import VGParams, vg_market_omega
from vgpp_pricing.domain.pricing import DEFAULT_CHUNK_SIZE, MIN_PATHS, MarketModel, MCPrice, estimate, vgpp_omega
from vgpp_pricing.domain.vgpp import VGPPParams, vgpp_path_forward

_logger = logging.getLogger("lookback")


def _forward_paths(params: VGPPParams | VGParams, grid: NDArray, rng: RngStream, n_paths: int) -> NDArray:
    if isinstance(params, VGParams):
        return vg_path_forward(params, grid, rng, n_paths).x_values
    return vgpp_path_forward(params, grid, rng, n_paths).x_values


def _omega(params: VGPPParams | VGParams) -> float:
    return vg_market_omega(params) if isinstance(params, VGParams) else vgpp_omega(params)


def price_lookback_ladder(
    params: VGPPParams | VGParams,
    market: MarketModel,
    K: float,
    T: float,
    step_ladder: list[int],
    n_paths: int,
    rng: RngStream,
    workers: int = 1,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> list[MCPrice]:
    """Fixed-strike lookback calls for nested monitoring grids on common paths.

    Every ladder entry must divide the finest one; coarser grids monitor a subset of the finest dates,
    so prices are pathwise non-decreasing along an increasing ladder.
    """
    if not K > 0 or not T > 0:
        raise DomainError("K and T must be positive")
    if n_paths < MIN_PATHS:
        raise DomainError(f"n_paths must be at least {MIN_PATHS}, got {n_paths}")
    if not step_ladder or min(step_ladder) < 1:
        raise DomainError("step counts must be positive")
    finest = max(step_ladder)
    if any(finest % steps for steps in step_ladder):
        raise DomainError(f"every step count must divide the finest, got {step_ladder}")

    grid = np.linspace(0.0, T, finest + 1)
    drift = (market.r + _omega(params)) * grid

    def chunk_maxima(size: int, stream: RngStream) -> NDArray:
        forwards = market.F0 * np.exp(drift + _forward_paths(params, grid, stream, size))
        return np.stack([forwards[:, finest // steps :: finest // steps].max(axis=1) for steps in step_ladder])

    maxima = np.concatenate(partitioned_map(chunk_maxima, n_paths, rng, chunk_size, workers), axis=1)
    discount = market.discount(T)
    return [estimate(discount * np.maximum(row - K, 0.0)) for row in maxima]


def price_lookback_call_max(
    params: VGPPParams | VGParams,
    market: MarketModel,
    K: float,
    T: float,
    n_steps: int,
    n_paths: int,
    rng: RngStream,
    workers: int = 1,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> MCPrice:
    """e^{-rT} E[(max_i F(t_i) - K)^+] over ``n_steps`` equispaced dates t_1 .. t_n = T."""
    result = price_lookback_ladder(params, market, K, T, [n_steps], n_paths, rng, workers, chunk_size)[0]
    _logger.debug(
        f"Lookback call K={K}, T={T}, {n_steps} dates: {result.price:.6f} +- {result.stderr:.6f}",
        extra={"vgpp_strike": K, "vgpp_maturity": T, "vgpp_steps": n_steps},
    )
    return result
