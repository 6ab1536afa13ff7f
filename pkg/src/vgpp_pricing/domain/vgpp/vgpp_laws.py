"""Exact laws of the VG++ process: chf, decomposition, Levy density, cumulants and density."""

import logging
import math

import numpy as np
from numpy.typing import ArrayLike, NDArray

from vgpp_pricing.domain.ept import CGMParams, cgm_from_vg, vg_ept_log_density
from vgpp_pricing.domain.errors import DomainError, NumericalError
from vgpp_pricing.domain.gammapp import (
    DEFAULT_DENSITY_TOLERANCE,
    AtomicDensity,
    DensityPoint,
    GammaPPParams,
    gpp_chf,
    gpp_cumulants,
    polya_mixture,
)
from vgpp_pricing.domain.vgpp.decomposed_betas import DecomposedBetas
from vgpp_pricing.domain.vgpp.vgpp_params import VGPPParams

_logger = logging.getLogger("vgpp_laws")

# relative agreement required between the chf and its two-sided factorization
_FACTORIZATION_TOLERANCE = 1e-12
_FACTORIZATION_GRID = np.linspace(-25.0, 25.0, 101)


def _require_positive_time(t: float) -> None:
    if not t > 0:
        raise DomainError(f"t must be positive, got {t}")


def _clock_argument(params: VGPPParams, u: NDArray) -> NDArray:
    # the VG++ chf is the Gamma++ chf evaluated at theta u + i u^2 sigma^2 / 2
    return params.theta * u + 0.5j * u * u * params.sigma * params.sigma


def vgpp_chf(params: VGPPParams, t: float, u: ArrayLike) -> complex | NDArray:
    """((beta - i psi a) / (beta - i psi))^(alpha t) with psi = theta u + i u^2 sigma^2 / 2."""
    _require_positive_time(t)
    return gpp_chf(params.subordinator, t, _clock_argument(params, np.asarray(u, dtype=complex)))


def vgpp_decompose(params: VGPPParams) -> DecomposedBetas:
    """Split rates from the roots of beta - i psi(u) and beta / a - i psi(u) in u."""
    sigma2 = params.sigma * params.sigma
    theta = params.theta
    root = math.sqrt(theta * theta + 2.0 * sigma2 * params.beta)
    tilde_root = math.sqrt(theta * theta + 2.0 * sigma2 * params.beta / params.a)
    return DecomposedBetas(
        beta_p=(root - theta) / sigma2,
        beta_n=(root + theta) / sigma2,
        tbeta_p=(tilde_root - theta) / sigma2,
        tbeta_n=(tilde_root + theta) / sigma2,
    )


def _relative_gap(lhs: NDArray, rhs: NDArray) -> float:
    return float(np.max(np.abs(lhs - rhs) / np.maximum(np.abs(lhs), 1e-300)))


def factorized_chf(params: VGPPParams, t: float, u: ArrayLike) -> complex | NDArray:
    """chf of Z_p(t) - Z_n(t) with the two Gamma++ laws of ``vgpp_decompose``."""
    betas = vgpp_decompose(params)
    u_arr = np.asarray(u, dtype=complex)
    positive = GammaPPParams(a=betas.a_p, alpha=params.alpha, beta=betas.beta_p)
    negative = GammaPPParams(a=betas.a_n, alpha=params.alpha, beta=betas.beta_n)
    return gpp_chf(positive, t, u_arr) * gpp_chf(negative, t, -u_arr)


def compound_rates(params: VGPPParams) -> tuple[float, float]:
    """Jump rates (tbeta_p, tbeta_n) of the Polya compound representation, checked against the chf.

    One mixture component has chf (beta / a) / (beta / a - i psi(u)), the law of I - J with
    I ~ Exp(tbeta_p) and J ~ Exp(tbeta_n). The rates are accepted only if that identity holds on a
    u-grid.
    """
    betas = vgpp_decompose(params)
    u = _FACTORIZATION_GRID.astype(complex)
    clock_rate = params.beta / params.a
    component = clock_rate / (clock_rate - 1j * _clock_argument(params, u))
    candidate = betas.tbeta_p * betas.tbeta_n / ((betas.tbeta_p - 1j * u) * (betas.tbeta_n + 1j * u))

    gap = _relative_gap(component, candidate)
    if gap > _FACTORIZATION_TOLERANCE:
        raise NumericalError(f"compound jump rates fail the chf identity (relative gap {gap:.3e})")
    return betas.tbeta_p, betas.tbeta_n


def vgpp_levy_density(params: VGPPParams, x: ArrayLike) -> float | NDArray:
    """(alpha / |x|)(e^{-beta_p x} - e^{-tbeta_p x}) for x > 0, mirrored with the n-rates for x < 0."""
    x_arr = np.asarray(x, dtype=float)
    if np.any(x_arr == 0):
        raise DomainError("the Levy density is not defined at x = 0")
    betas = vgpp_decompose(params)

    abs_x = np.abs(x_arr)
    slow = np.where(x_arr > 0, betas.beta_p, betas.beta_n)
    fast = np.where(x_arr > 0, betas.tbeta_p, betas.tbeta_n)
    value = params.alpha * (np.exp(-slow * abs_x) - np.exp(-fast * abs_x)) / abs_x
    return value if np.ndim(value) else float(value)


def vgpp_cumulants(params: VGPPParams, t: float, n: int) -> float:
    """n-th cumulant through subordination: K_X(s) = K_Z(theta s + sigma^2 s^2 / 2)."""
    if n not in (1, 2, 3, 4):
        raise DomainError(f"cumulant order must lie in [1, 4], got {n}")
    clock = params.subordinator
    k = {order: gpp_cumulants(clock, t, order) for order in range(1, n + 1)}
    theta, s2 = params.theta, params.sigma * params.sigma

    if n == 1:
        return theta * k[1]
    if n == 2:
        return s2 * k[1] + theta**2 * k[2]
    if n == 3:
        return theta**3 * k[3] + 3.0 * theta * s2 * k[2]
    return theta**4 * k[4] + 6.0 * theta**2 * s2 * k[3] + 3.0 * s2 * s2 * k[2]


def vgpp_skewness(params: VGPPParams, t: float) -> float:
    return vgpp_cumulants(params, t, 3) / vgpp_cumulants(params, t, 2) ** 1.5


def vgpp_kurtosis(params: VGPPParams, t: float) -> float:
    """Non-excess kurtosis 3 + c4 / c2^2."""
    return 3.0 + vgpp_cumulants(params, t, 4) / vgpp_cumulants(params, t, 2) ** 2


def vgpp_moments(params: VGPPParams, t: float) -> tuple[float, float, float, float]:
    """(mean, variance, skewness, kurtosis) of X(t)."""
    return (
        vgpp_cumulants(params, t, 1),
        vgpp_cumulants(params, t, 2),
        vgpp_skewness(params, t),
        vgpp_kurtosis(params, t),
    )


def mixture_component_cgm(params: VGPPParams) -> tuple[float, float]:
    """(G, M) of the unit-shape VG component with clock rate beta / a."""
    return cgm_from_vg(params.beta / params.a, params.sigma, params.theta)


def vgpp_pdf_continuous(
    params: VGPPParams, t: float, x: ArrayLike, tolerance: float = DEFAULT_DENSITY_TOLERANCE
) -> float | NDArray:
    """Polya(alpha t, 1 - a) mixture of integer-shape VG densities with clock rate beta / a."""
    _require_positive_time(t)
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    G, M = mixture_component_cgm(params)

    def log_component(k: int) -> NDArray:
        return np.asarray(vg_ept_log_density(CGMParams(C=k, G=G, M=M), x_arr))

    value = polya_mixture(params.subordinator.counter(t), log_component, tolerance)
    return value if np.ndim(x) else float(value[0])


def vgpp_law(params: VGPPParams, t: float, tolerance: float = DEFAULT_DENSITY_TOLERANCE) -> AtomicDensity:
    _require_positive_time(t)
    return AtomicDensity(
        atom_weight=params.subordinator.atom(t),
        continuous_part=lambda x: vgpp_pdf_continuous(params, t, x, tolerance),
    )


def vgpp_density(
    params: VGPPParams, t: float, x: ArrayLike, tolerance: float = DEFAULT_DENSITY_TOLERANCE
) -> DensityPoint:
    """Atom a^(alpha t) at zero plus the continuous mixture evaluated at ``x``."""
    return vgpp_law(params, t, tolerance)(x)


def prob_zero_increment(params: VGPPParams | GammaPPParams, dt: float) -> float:
    """P(X(t + dt) - X(t) = 0) = a^(alpha dt)."""
    _require_positive_time(dt)
    clock = params.subordinator if isinstance(params, VGPPParams) else params
    return clock.atom(dt)
