from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from vgpp_pricing.domain.errors import DomainError

TRADING_DAY = 1.0 / 252.0


@dataclass(frozen=True)
class ReturnSeries:
    """Observed log-prices on strictly increasing dates; only increments enter the estimators.

    Attributes:
        timestamps (NDArray): Observation dates (numpy datetime64).
        log_prices (NDArray): Log of the observed prices.
        dt (float): Year fraction between consecutive observations.
    """

    timestamps: NDArray
    log_prices: NDArray
    dt: float = TRADING_DAY

    def __post_init__(self):
        if self.timestamps.shape != self.log_prices.shape or self.log_prices.ndim != 1:
            raise DomainError("timestamps and log_prices must be vectors of equal length")
        if self.log_prices.size < 2:
            raise DomainError("a return series needs at least two observations")
        if np.any(np.diff(self.timestamps) <= np.timedelta64(0)):
            raise DomainError("timestamps must be strictly increasing")
        if not np.all(np.isfinite(self.log_prices)):
            raise DomainError("log_prices must be finite")
        if not self.dt > 0:
            raise DomainError(f"dt must be positive, got {self.dt}")

    @property
    def increments(self) -> NDArray:
        return np.diff(self.log_prices)

    @classmethod
    def from_prices(cls, timestamps: NDArray, prices: NDArray, dt: float = TRADING_DAY) -> "ReturnSeries":
        prices = np.asarray(prices, dtype=float)
        if np.any(prices <= 0):
            raise DomainError("prices must be positive")
        return cls(timestamps=np.asarray(timestamps, dtype="datetime64[D]"), log_prices=np.log(prices), dt=dt)

    @classmethod
    def from_increments(
        cls, increments: NDArray, dt: float = TRADING_DAY, start: str = "2017-08-23", initial_log_price: float = 0.0
    ) -> "ReturnSeries":
        """Series on consecutive calendar days built from simulated increments."""
        steps = np.asarray(increments, dtype=float)
        log_prices = initial_log_price + np.concatenate(([0.0], np.cumsum(steps)))
        timestamps = np.datetime64(start, "D") + np.arange(log_prices.size)
        return cls(timestamps=timestamps, log_prices=log_prices, dt=dt)
