import logging
import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from vgpp_pricing.domain.distributions import RngStream, partitioned_map
from vgpp_pricing.domain.errors import DomainError
from vgpp_pricing.domain.pricing.market_model import MarketModel
from vgpp_pricing.domain.pricing.omega import vgpp_omega
from vgpp_pricing.domain.vgpp import VGPPParams, vgpp_sample

_logger = logging.getLogger("mc_pricer")

MIN_PATHS = 1_000
DEFAULT_CHUNK_SIZE = 100_000


@dataclass(frozen=True)
class MCPrice:
    """Monte Carlo estimate with its standard error (sample std / sqrt(n_paths))."""

    price: float
    stderr: float
    n_paths: int


def estimate(samples: NDArray) -> MCPrice:
    n = samples.size
    return MCPrice(price=float(samples.mean()), stderr=float(samples.std(ddof=1) / math.sqrt(n)), n_paths=n)


def terminal_forwards(
    params: VGPPParams,
    market: MarketModel,
    T: float,
    n_paths: int,
    rng: RngStream,
    workers: int = 1,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> NDArray:
    """F(T) = F0 exp((r + omega) T + X(T)) over ``n_paths`` single-step draws."""
    if n_paths < MIN_PATHS:
        raise DomainError(f"n_paths must be at least {MIN_PATHS}, got {n_paths}")
    if not T > 0:
        raise DomainError(f"T must be positive, got {T}")
    omega = vgpp_omega(params)

    chunks = partitioned_map(
        lambda size, stream: np.asarray(vgpp_sample(params, T, stream, size)),
        n_paths,
        rng,
        chunk_size,
        workers,
    )
    return market.F0 * np.exp((market.r + omega) * T + np.concatenate(chunks))


def price_calls_mc(
    params: VGPPParams,
    market: MarketModel,
    strikes: ArrayLike,
    T: float,
    n_paths: int,
    rng: RngStream,
    workers: int = 1,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    put: bool = False,
) -> list[MCPrice]:
    """Prices for several strikes on one set of terminal draws (common random numbers)."""
    forwards = terminal_forwards(params, market, T, n_paths, rng, workers, chunk_size)
    discount = market.discount(T)
    results = []
    for K in np.atleast_1d(np.asarray(strikes, dtype=float)):
        if not K > 0:
            raise DomainError(f"strike must be positive, got {K}")
        payoff = np.maximum(K - forwards, 0.0) if put else np.maximum(forwards - K, 0.0)
        results.append(estimate(discount * payoff))

    _logger.debug(
        f"Monte Carlo priced {len(results)} strikes at T={T} on {n_paths} paths",
        extra={"vgpp_paths": n_paths, "vgpp_maturity": T},
    )
    return results


def price_call_mc(
    params: VGPPParams,
    market: MarketModel,
    K: float,
    T: float,
    n_paths: int,
    rng: RngStream,
    workers: int = 1,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> MCPrice:
    """Mean of e^{-rT}(F(T) - K)^+ over terminal draws."""
    return price_calls_mc(params, market, [K], T, n_paths, rng, workers, chunk_size)[0]


def price_put_mc(
    params: VGPPParams,
    market: MarketModel,
    K: float,
    T: float,
    n_paths: int,
    rng: RngStream,
    workers: int = 1,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> MCPrice:
    return price_calls_mc(params, market, [K], T, n_paths, rng, workers, chunk_size, put=True)[0]
