import math
from dataclasses import dataclass

from vgpp_pricing.domain.ept import cgm_from_vg
from vgpp_pricing.domain.errors import DomainError
from vgpp_pricing.domain.vgpp import VGPPParams


@dataclass(frozen=True)
class VGParams:
    """Variance Gamma process theta G(t) + sigma W(G(t)) with a Gamma(alpha t, beta) clock."""

    theta: float
    sigma: float
    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.sigma > 0 and self.alpha > 0 and self.beta > 0):
            raise DomainError("sigma, alpha and beta must be positive")

    @property
    def cgm(self) -> tuple[float, float]:
        """(G, M) of the unit-time law."""
        return cgm_from_vg(self.beta, self.sigma, self.theta)


def vg_market_omega(params: VGParams) -> float:
    """alpha log((1 - 1/M)(1 + 1/G)), the per-unit-time martingale correction."""
    G, M = params.cgm
    if not M > 1:
        raise DomainError(f"omega exists only for M > 1, got M = {M}")
    return params.alpha * math.log((1.0 - 1.0 / M) * (1.0 + 1.0 / G))


def moment_matched_vg(params: VGPPParams) -> VGParams:
    """VG whose gamma clock has the same mean and variance as the Gamma++ clock.

    Clock mean alpha (1 - a) / beta and variance alpha (1 - a^2) / beta^2 per unit time.
    """
    a, alpha, beta = params.a, params.alpha, params.beta
    vg_beta = beta / (1.0 + a)
    vg_alpha = alpha * (1.0 - a) / (1.0 + a)
    return VGParams(theta=params.theta, sigma=params.sigma, alpha=vg_alpha, beta=vg_beta)
