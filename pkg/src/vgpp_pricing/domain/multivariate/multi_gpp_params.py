from dataclasses import dataclass, field

from vgpp_pricing.domain.errors import DomainError
from vgpp_pricing.domain.gammapp import GammaPPParams


@dataclass(frozen=True)
class AssetLoading:
    """Idiosyncratic shape ``alpha`` (zero allowed) and common-factor loading ``c`` of one asset."""

    alpha: float
    c: float

    def __post_init__(self):
        if not self.alpha >= 0:
            raise DomainError(f"asset alpha must be non-negative, got {self.alpha}")
        if not self.c > 0:
            raise DomainError(f"asset loading c must be positive, got {self.c}")


@dataclass(frozen=True)
class BrownianLayer:
    theta: float
    sigma: float

    def __post_init__(self):
        if not self.sigma > 0:
            raise DomainError(f"sigma must be positive, got {self.sigma}")


@dataclass(frozen=True)
class MultiGPPParams:
    """Common-factor Gamma++ subordinator H_i(t) = X_i(t) + c_i Z(t).

    Z ~ Gamma++(a, alpha_common, beta) is shared; X_i ~ Gamma++(a, alpha_i, beta / c_i) are independent.
    Every component uses the same ``a``.

    Attributes:
        a (float): Shared self-decomposability parameter in (0, 1).
        alpha_common (float): Shape rate of the common factor.
        beta (float): Rate of the common factor.
        assets (tuple[AssetLoading, ...]): Per-asset (alpha_i, c_i).
    """

    a: float
    alpha_common: float
    beta: float
    assets: tuple[AssetLoading, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "assets", tuple(self.assets))
        GammaPPParams(self.a, self.alpha_common, self.beta)
        if not self.assets:
            raise DomainError("at least one asset is required")

    @property
    def n_assets(self) -> int:
        return len(self.assets)

    @property
    def common(self) -> GammaPPParams:
        return GammaPPParams(self.a, self.alpha_common, self.beta)

    def idiosyncratic(self, i: int) -> GammaPPParams | None:
        """Law of X_i, or None when alpha_i = 0 (X_i is identically zero)."""
        asset = self._asset(i)
        if asset.alpha == 0:
            return None
        return GammaPPParams(self.a, asset.alpha, self.beta / asset.c)

    def _asset(self, i: int) -> AssetLoading:
        if not 0 <= i < self.n_assets:
            raise IndexError(f"asset index {i} outside [0, {self.n_assets})")
        return self.assets[i]


def marginal_params(params: MultiGPPParams, i: int) -> GammaPPParams:
    """H_i(t) ~ Gamma++(a, (alpha_i + alpha_common) t, beta / c_i)."""
    asset = params._asset(i)
    return GammaPPParams(params.a, asset.alpha + params.alpha_common, params.beta / asset.c)
