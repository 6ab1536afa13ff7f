"""Standard laws consumed by the simulation algorithms.

Every law is shape-rate parameterized (never shape-scale). Each sampler takes an explicit
``RngStream`` and an optional numpy ``size``; with ``size=None`` a scalar is returned.
"""

import numpy as np
from numpy.typing import ArrayLike, NDArray

from vgpp_pricing.domain.distributions.rng_stream import RngStream
from vgpp_pricing.domain.errors import DomainError

Size = int | tuple[int, ...] | None


def _require_positive(name: str, value: ArrayLike) -> None:
    if np.any(np.asarray(value) <= 0) or np.any(~np.isfinite(np.asarray(value, dtype=float))):
        raise DomainError(f"{name} must be positive and finite")


def gamma_sample(shape: ArrayLike, rate: ArrayLike, rng: RngStream, size: Size = None) -> float | NDArray:
    """Gamma(shape, rate) draw; valid for every positive shape, including shape << 1."""
    _require_positive("shape", shape)
    _require_positive("rate", rate)
    # numpy boosts shape < 1 internally (G(k) = G(k+1) * U^(1/k))
    return rng.generator.gamma(shape, 1.0 / np.asarray(rate, dtype=float), size)


def beta_sample(a: ArrayLike, b: ArrayLike, rng: RngStream, size: Size = None) -> float | NDArray:
    _require_positive("a", a)
    _require_positive("b", b)
    return rng.generator.beta(a, b, size)


def exp_sample(rate: ArrayLike, rng: RngStream, size: Size = None) -> float | NDArray:
    _require_positive("rate", rate)
    return rng.generator.exponential(1.0 / np.asarray(rate, dtype=float), size)


def poisson_sample(mean: ArrayLike, rng: RngStream, size: Size = None) -> int | NDArray:
    if np.any(np.asarray(mean) < 0):
        raise DomainError("poisson mean must be non-negative")
    return rng.generator.poisson(mean, size)


def normal_sample(mean: ArrayLike, variance: ArrayLike, rng: RngStream, size: Size = None) -> float | NDArray:
    """Normal draw parameterized by variance; a zero variance returns the mean exactly."""
    if np.any(np.asarray(variance) < 0):
        raise DomainError("variance must be non-negative")
    return rng.generator.normal(mean, np.sqrt(variance), size)


def binomial_sample(n: ArrayLike, p: ArrayLike, rng: RngStream, size: Size = None) -> int | NDArray:
    if np.any(np.asarray(n) < 0):
        raise DomainError("binomial n must be non-negative")
    p_arr = np.asarray(p)
    if np.any((p_arr < 0) | (p_arr > 1)):
        raise DomainError("binomial p must lie in [0, 1]")
    return rng.generator.binomial(n, p, size)


def uniform_sample(rng: RngStream, size: Size = None) -> float | NDArray:
    return rng.generator.random(size)
