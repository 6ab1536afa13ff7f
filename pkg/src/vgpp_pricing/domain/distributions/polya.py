import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.special import gammaln

from vgpp_pricing.domain.distributions.base_samplers import Size, gamma_sample, poisson_sample
from vgpp_pricing.domain.distributions.polya_params import PolyaParams
from vgpp_pricing.domain.distributions.rng_stream import RngStream
from vgpp_pricing.domain.errors import DomainError


def polya_logpmf(params: PolyaParams, k: ArrayLike) -> float | NDArray:
    """Log of the Polya pmf through log-gamma arithmetic (stable for shapes in the thousands)."""
    k_arr = np.asarray(k)
    if np.any(k_arr < 0) or np.any(k_arr != np.floor(k_arr)):
        raise DomainError("Polya support is the non-negative integers")

    shape, p = params.shape, params.success_prob
    value = (
        gammaln(shape + k_arr)
        - gammaln(shape)
        - gammaln(k_arr + 1.0)
        + shape * np.log1p(-p)
        + k_arr * np.log(p)
    )
    return value if np.ndim(value) else float(value)


def polya_pmf(params: PolyaParams, k: ArrayLike) -> float | NDArray:
    """C(shape + k - 1, k) (1 - p)^shape p^k with the generalized binomial coefficient."""
    return np.exp(polya_logpmf(params, k))


def polya_sample(params: PolyaParams, rng: RngStream, size: Size = None) -> int | NDArray:
    """Gamma-Poisson mixture: lambda ~ Gamma(shape, (1 - p) / p), S | lambda ~ Poisson(lambda).

    Exact for every real shape.
    """
    p = params.success_prob
    intensity = gamma_sample(params.shape, (1.0 - p) / p, rng, size)
    return poisson_sample(intensity, rng)
