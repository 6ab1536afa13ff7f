from dataclasses import dataclass

from vgpp_pricing.domain.errors import DomainError
from vgpp_pricing.domain.gammapp import GammaPPParams


@dataclass(frozen=True)
class VGPPParams:
    """Parameters of X(t) = theta Z(t) + sigma W(Z(t)) with Z a Gamma++ subordinator.

    Attributes:
        theta (float): Brownian drift.
        sigma (float): Brownian diffusion.
        a (float): Self-decomposability parameter in (0, 1).
        alpha (float): Shape rate of the clock.
        beta (float): Rate of the clock.
    """

    theta: float
    sigma: float
    a: float
    alpha: float
    beta: float

    def __post_init__(self):
        if not self.sigma > 0:
            raise DomainError(f"sigma must be positive, got {self.sigma}")
        # validates the clock parameters
        GammaPPParams(a=self.a, alpha=self.alpha, beta=self.beta)

    @property
    def subordinator(self) -> GammaPPParams:
        return GammaPPParams(a=self.a, alpha=self.alpha, beta=self.beta)

    @property
    def exponent_shift(self) -> float:
        """theta + sigma^2 / 2, the clock argument of E[e^X]."""
        return self.theta + 0.5 * self.sigma * self.sigma

    @classmethod
    def unit_mean_clock(cls, theta: float, sigma: float, a: float, alpha: float) -> "VGPPParams":
        """Parameters with beta = (1 - a) alpha, so that E[Z(t)] = t."""
        return cls(theta=theta, sigma=sigma, a=a, alpha=alpha, beta=(1.0 - a) * alpha)
