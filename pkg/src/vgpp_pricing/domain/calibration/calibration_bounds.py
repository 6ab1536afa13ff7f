from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from vgpp_pricing.domain.errors import DomainError
from vgpp_pricing.domain.vgpp import VGPPParams


@dataclass(frozen=True)
class CalibrationBounds:
    """Box bounds on the free parameters (theta, sigma, a, alpha); beta is tied to (1 - a) alpha."""

    theta: tuple[float, float] = (-5.0, 5.0)
    sigma: tuple[float, float] = (1e-3, 5.0)
    a: tuple[float, float] = (0.01, 0.99)
    alpha: tuple[float, float] = (1e-2, 1e5)

    def __post_init__(self):
        for name, (low, high) in self.as_dict().items():
            if not low < high:
                raise DomainError(f"bounds for {name} must satisfy low < high, got ({low}, {high})")
        if self.sigma[0] <= 0 or self.alpha[0] <= 0:
            raise DomainError("sigma and alpha bounds must be positive")
        if self.a[0] <= 0 or self.a[1] >= 1:
            raise DomainError("a bounds must lie inside (0, 1)")

    def as_dict(self) -> dict[str, tuple[float, float]]:
        return {"theta": self.theta, "sigma": self.sigma, "a": self.a, "alpha": self.alpha}

    @property
    def lower(self) -> NDArray:
        return np.array([self.theta[0], self.sigma[0], self.a[0], self.alpha[0]])

    @property
    def upper(self) -> NDArray:
        return np.array([self.theta[1], self.sigma[1], self.a[1], self.alpha[1]])

    def contains(self, vector: NDArray) -> bool:
        return bool(np.all(vector >= self.lower) and np.all(vector <= self.upper))

    def clip(self, vector: NDArray) -> NDArray:
        return np.clip(vector, self.lower, self.upper)

    def touching(self, vector: NDArray, rel: float = 1e-6) -> list[str]:
        """Names of parameters sitting on a bound."""
        span = self.upper - self.lower
        names = list(self.as_dict())
        hits = (np.abs(vector - self.lower) <= rel * span) | (np.abs(vector - self.upper) <= rel * span)
        return [name for name, hit in zip(names, hits) if hit]


def to_vector(params: VGPPParams) -> NDArray:
    return np.array([params.theta, params.sigma, params.a, params.alpha])


def from_vector(vector: NDArray) -> VGPPParams:
    """Parameters with beta = (1 - a) alpha, so that the clock has unit mean rate."""
    theta, sigma, a, alpha = (float(v) for v in vector)
    return VGPPParams.unit_mean_clock(theta=theta, sigma=sigma, a=a, alpha=alpha)
