import math

from vgpp_pricing.domain.errors import DomainError
from vgpp_pricing.domain.vgpp import VGPPParams


def vgpp_omega(params: VGPPParams) -> float:
    """Martingale correction alpha log((beta - k) / (beta - a k)) with k = theta + sigma^2 / 2."""
    shift = params.exponent_shift
    if not params.beta > shift:
        raise DomainError(
            f"E[e^X] is infinite: need beta > theta + sigma^2/2, got beta={params.beta}, theta + sigma^2/2={shift}"
        )
    if not params.beta > params.a * shift:
        raise DomainError(
            f"E[e^X] is infinite: need beta > a (theta + sigma^2/2), got beta={params.beta}, "
            f"a (theta + sigma^2/2)={params.a * shift}"
        )
    return params.alpha * math.log((params.beta - shift) / (params.beta - params.a * shift))
