"""Exact laws of the Gamma++ subordinator: chf, atom-plus-Erlang-mixture density, Levy triplet, cumulants."""

import logging
import math

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.special import gammaln

from vgpp_pricing.domain.errors import DomainError
from vgpp_pricing.domain.gammapp.atomic_density import AtomicDensity, DensityPoint
from vgpp_pricing.domain.gammapp.gammapp_params import GammaPPParams
from vgpp_pricing.domain.gammapp.levy_triplet import LevyTriplet
from vgpp_pricing.domain.gammapp.polya_mixture import polya_mixture

_logger = logging.getLogger("gammapp_laws")

DEFAULT_DENSITY_TOLERANCE = 1e-10


def _require_positive_time(t: float) -> None:
    if not t > 0:
        raise DomainError(f"t must be positive, got {t}")


def gpp_chf(params: GammaPPParams, t: float, u: ArrayLike) -> complex | NDArray:
    """((beta - i u a) / (beta - i u))^(alpha t), principal branch. Accepts complex ``u``."""
    _require_positive_time(t)
    u_arr = np.asarray(u, dtype=complex)
    log_ratio = np.log(params.beta - 1j * u_arr * params.a) - np.log(params.beta - 1j * u_arr)
    value = np.exp(params.alpha * t * log_ratio)
    return value if np.ndim(value) else complex(value)


def gpp_pdf_continuous(
    params: GammaPPParams, t: float, x: ArrayLike, tolerance: float = DEFAULT_DENSITY_TOLERANCE
) -> float | NDArray:
    """Continuous part of the law: Polya(alpha t, 1 - a) mixture of Erlang(n, beta / a) densities.

    Zero for x <= 0.
    """
    _require_positive_time(t)
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    result = np.zeros_like(x_arr)
    positive = x_arr > 0
    if np.any(positive):
        xs = x_arr[positive]
        rate = params.erlang_rate
        log_x = np.log(xs)

        def log_erlang(n: int) -> NDArray:
            return n * math.log(rate) + (n - 1) * log_x - rate * xs - gammaln(n)

        result[positive] = polya_mixture(params.counter(t), log_erlang, tolerance)

    return result if np.ndim(x) else float(result[0])


def gpp_law(params: GammaPPParams, t: float, tolerance: float = DEFAULT_DENSITY_TOLERANCE) -> AtomicDensity:
    """Law of Z(t): atom a^(alpha t) at zero plus the Erlang mixture."""
    _require_positive_time(t)
    return AtomicDensity(
        atom_weight=params.atom(t),
        continuous_part=lambda x: gpp_pdf_continuous(params, t, x, tolerance),
    )


def gpp_density(
    params: GammaPPParams, t: float, x: ArrayLike, tolerance: float = DEFAULT_DENSITY_TOLERANCE
) -> DensityPoint:
    """Evaluate the law of Z(t) at ``x``; negative x gets zero continuous density."""
    return gpp_law(params, t, tolerance)(x)


def gpp_levy_triplet(params: GammaPPParams) -> LevyTriplet:
    """Levy triplet with drift (alpha / beta)[(1 - e^-beta) - a(1 - e^(-beta / a))] and zero diffusion."""
    alpha, beta, a = params.alpha, params.beta, params.a
    drift = (alpha / beta) * (-math.expm1(-beta) + a * math.expm1(-beta / a))

    def levy_density(x: ArrayLike) -> float | NDArray:
        x_arr = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            value = np.where(
                x_arr > 0,
                alpha * (np.exp(-beta * x_arr) - np.exp(-beta * x_arr / a)) / x_arr,
                0.0,
            )
        return value if np.ndim(value) else float(value)

    return LevyTriplet(drift=drift, diffusion=0.0, levy_density=levy_density)


def gpp_cumulants(params: GammaPPParams, t: float, n: int) -> float:
    """n-th cumulant (n - 1)! alpha t (1 - a^n) / beta^n for n in 1..4."""
    _require_positive_time(t)
    if n not in (1, 2, 3, 4):
        raise DomainError(f"cumulant order must lie in [1, 4], got {n}")
    return math.factorial(n - 1) * params.alpha * t * (1.0 - params.a**n) / params.beta**n
