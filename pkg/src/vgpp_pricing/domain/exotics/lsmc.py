"""Longstaff-Schwartz pricing of American puts on the VG++ forward.

Exercise is allowed on the equispaced grid t_0 = 0, t_1, ..., t_n = T.
"""

import logging
import math
from collections.abc import Iterator

import numpy as np
from numpy.polynomial import Polynomial
from numpy.typing import NDArray

from vgpp_pricing.domain.distributions import RngStream
from vgpp_pricing.domain.errors import DomainError
from vgpp_pricing.domain.exotics.lsmc_config import LSMCConfig, SimulationDirection
from vgpp_pricing.domain.pricing import MarketModel, MCPrice, price_put_closed, vgpp_omega
from vgpp_pricing.domain.vgpp import SliceLedger, VGPPParams, backward_process_slices, vgpp_path_forward

_logger = logging.getLogger("lsmc")


def _continuation(forwards: NDArray, discounted_cashflow: NDArray, degree: int) -> NDArray:
    """Least-squares polynomial fit of the discounted cash flow on the forward level."""
    if np.ptp(forwards) == 0 or forwards.size <= degree + 1:
        return np.full(forwards.shape, discounted_cashflow.mean())
    return Polynomial.fit(forwards, discounted_cashflow, degree)(forwards)


def _forward_slices(
    params: VGPPParams, grid: NDArray, rng: RngStream, n_paths: int, ledger: SliceLedger | None
) -> Iterator[tuple[int, NDArray]]:
    x_values = vgpp_path_forward(params, grid, rng, n_paths).x_values
    if ledger is not None:
        ledger.allocate(grid.size)
    for i in range(grid.size - 1, -1, -1):
        yield i, x_values[:, i]
    if ledger is not None:
        ledger.release(grid.size)


def _backward_slices(
    params: VGPPParams, grid: NDArray, rng: RngStream, n_paths: int, ledger: SliceLedger | None
) -> Iterator[tuple[int, NDArray]]:
    for i, _, x_slice in backward_process_slices(params, grid, rng, n_paths, ledger):
        yield i, x_slice


def price_american_put_lsmc(
    params: VGPPParams,
    market: MarketModel,
    K: float,
    T: float,
    cfg: LSMCConfig,
    rng: RngStream,
    ledger: SliceLedger | None = None,
) -> MCPrice:
    """Bellman recursion from maturity with regression of continuation values on in-the-money paths.

    A path exercises when the intrinsic value is at least the fitted continuation. Steps with no
    in-the-money path skip the regression. The estimate at time zero is the largest of the intrinsic value,
    the mean cash flow and the closed-form European put, all three being lower bounds of the American price.
    """
    if not K > 0 or not T > 0:
        raise DomainError("K and T must be positive")
    omega = vgpp_omega(params)
    grid = np.linspace(0.0, T, cfg.n_steps + 1)
    step_discount = math.exp(-market.r * T / cfg.n_steps)

    slices = (_forward_slices if cfg.direction is SimulationDirection.FORWARD else _backward_slices)(
        params, grid, rng, cfg.n_paths, ledger
    )

    cashflow: NDArray | None = None
    for i, x_slice in slices:
        forwards = market.F0 * np.exp((market.r + omega) * grid[i] + x_slice)
        intrinsic = np.maximum(K - forwards, 0.0)
        if cashflow is None:
            cashflow = intrinsic
            continue
        cashflow = cashflow * step_discount
        if i == 0:
            continue

        itm = intrinsic > 0
        if np.any(itm):
            fitted = _continuation(forwards[itm], cashflow[itm], cfg.basis_degree)
            exercise = intrinsic[itm] >= fitted
            cashflow[np.flatnonzero(itm)[exercise]] = intrinsic[itm][exercise]

    assert cashflow is not None

    continuation = float(cashflow.mean())
    stderr = float(cashflow.std(ddof=1) / math.sqrt(cashflow.size))
    european = price_put_closed(params, market, K, T)
    price = max(max(K - market.F0, 0.0), continuation, european)

    _logger.debug(
        f"American put K={K}, T={T}, F0={market.F0} ({cfg.direction.value}): {price:.6f} +- {stderr:.6f}",
        extra={"vgpp_strike": K, "vgpp_direction": cfg.direction.value, "vgpp_paths": cfg.n_paths},
    )
    return MCPrice(price=price, stderr=stderr, n_paths=cfg.n_paths)
