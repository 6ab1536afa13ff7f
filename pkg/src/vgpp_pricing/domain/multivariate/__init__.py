from vgpp_pricing.domain.multivariate.multi_gpp_params import (
    AssetLoading,
    BrownianLayer,
    MultiGPPParams,
    marginal_params,
)
from vgpp_pricing.domain.multivariate.multivariate_sampling import (
    sample_multivariate_subordinator,
    sample_multivariate_vgpp,
)

__all__ = [
    "AssetLoading",
    "BrownianLayer",
    "MultiGPPParams",
    "marginal_params",
    "sample_multivariate_subordinator",
    "sample_multivariate_vgpp",
]
