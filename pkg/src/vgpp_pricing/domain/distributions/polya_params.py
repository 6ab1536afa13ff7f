from dataclasses import dataclass

from vgpp_pricing.domain.errors import DomainError


@dataclass(frozen=True)
class PolyaParams:
    """Polya (negative binomial with real shape) law.

    pmf(k) = C(shape + k - 1, k) (1 - p)^shape p^k, mean shape * p / (1 - p).

    Attributes:
        shape (float): Positive real shape (alpha or alpha * t).
        success_prob (float): p in (0, 1).
    """

    shape: float
    success_prob: float

    def __post_init__(self):
        if not self.shape > 0:
            raise DomainError(f"Polya shape must be positive, got {self.shape}")
        if not 0 < self.success_prob < 1:
            raise DomainError(f"Polya success_prob must lie in (0, 1), got {self.success_prob}")

    @property
    def mean(self) -> float:
        return self.shape * self.success_prob / (1.0 - self.success_prob)

    @property
    def variance(self) -> float:
        return self.shape * self.success_prob / (1.0 - self.success_prob) ** 2
