from dataclasses import dataclass

from vgpp_pricing.domain.errors import DomainError
from vgpp_pricing.domain.pricing import MarketModel


@dataclass(frozen=True)
class Quote:
    K: float
    T: float
    mid: float

    def __post_init__(self):
        if not (self.K > 0 and self.T > 0 and self.mid > 0):
            raise DomainError(f"quote fields must be positive, got K={self.K}, T={self.T}, mid={self.mid}")


@dataclass(frozen=True)
class QuoteSet:
    """Call option mid prices on one underlying."""

    quotes: list[Quote]
    market: MarketModel

    def __post_init__(self):
        if not self.quotes:
            raise DomainError("a quote set needs at least one quote")

    @property
    def maturities(self) -> list[float]:
        return sorted({q.T for q in self.quotes})
