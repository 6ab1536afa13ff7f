import math
from dataclasses import dataclass

from vgpp_pricing.domain.distributions import PolyaParams
from vgpp_pricing.domain.errors import DomainError


@dataclass(frozen=True)
class GammaPPParams:
    """Parameters of the Gamma++ subordinator, the Levy process of the gamma a-remainder.

    Attributes:
        a (float): Self-decomposability parameter in (0, 1); also the liquidity indicator.
        alpha (float): Shape rate per unit time.
        beta (float): Rate.
    """

    a: float
    alpha: float
    beta: float

    def __post_init__(self):
        if not 0 < self.a < 1:
            raise DomainError(f"a must lie in (0, 1), got {self.a}")
        if not self.alpha > 0:
            raise DomainError(f"alpha must be positive, got {self.alpha}")
        if not self.beta > 0:
            raise DomainError(f"beta must be positive, got {self.beta}")

    def counter(self, t: float) -> PolyaParams:
        """Law of the Polya counter S(t) ~ Polya(alpha t, 1 - a)."""
        return PolyaParams(shape=self.alpha * t, success_prob=1.0 - self.a)

    def atom(self, t: float) -> float:
        """Mass of the atom at zero, a^(alpha t)."""
        return math.exp(self.alpha * t * math.log(self.a))

    @property
    def jump_intensity(self) -> float:
        """Intensity alpha log(1/a) of the compound-Poisson representation."""
        return self.alpha * math.log(1.0 / self.a)

    @property
    def erlang_rate(self) -> float:
        return self.beta / self.a
