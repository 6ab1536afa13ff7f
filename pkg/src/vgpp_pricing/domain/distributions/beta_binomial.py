import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.special import betaln, gammaln

from vgpp_pricing.domain.distributions.base_samplers import Size, beta_sample, binomial_sample
from vgpp_pricing.domain.distributions.rng_stream import RngStream
from vgpp_pricing.domain.errors import DomainError


def beta_binomial_logpmf(a: float, b: float, k: int, j: ArrayLike) -> float | NDArray:
    """log[C(k, j) B(a + j, b + k - j) / B(a, b)]."""
    j_arr = np.asarray(j, dtype=float)
    value = (
        gammaln(k + 1.0)
        - gammaln(j_arr + 1.0)
        - gammaln(k - j_arr + 1.0)
        + betaln(a + j_arr, b + k - j_arr)
        - betaln(a, b)
    )
    return value if np.ndim(value) else float(value)


def beta_binomial_sample(a: ArrayLike, b: ArrayLike, k: ArrayLike, rng: RngStream, size: Size = None) -> int | NDArray:
    """Two-stage draw: p ~ Beta(a, b), then Binomial(k, p). ``k = 0`` always yields 0."""
    if np.any(np.asarray(k) < 0):
        raise DomainError("beta-binomial k must be non-negative")
    p = beta_sample(a, b, rng, size)
    return binomial_sample(k, p, rng)
