import math
from dataclasses import dataclass

from vgpp_pricing.domain.errors import DomainError


@dataclass(frozen=True)
class MarketModel:
    """Risky forward F(t) = F0 exp((r + omega) t + X(t)) priced under continuous compounding at rate r.

    Attributes:
        F0 (float): Initial forward price.
        r (float): Risk-free rate.
    """

    F0: float
    r: float

    def __post_init__(self):
        if not self.F0 > 0:
            raise DomainError(f"F0 must be positive, got {self.F0}")

    def discount(self, T: float) -> float:
        return math.exp(-self.r * T)
