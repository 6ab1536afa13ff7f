"""Integer-shape Variance Gamma laws as two-sided exponential-polynomial densities.

A VG law whose gamma clock has integer shape C is the law of Gamma(C, M) - Gamma(C, G). Its density is
e^{Gx} sum_s c_s |x|^s / s! for x <= 0 and e^{-Mx} sum_s c_s x^s / s! for x > 0, with the same
coefficients on both sides, which gives a matrix realization and call prices without quadrature.
"""

import logging
import math

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.special import gammainc, gammaincc, gammaln, kve, logsumexp

from vgpp_pricing.domain.ept.cgm_params import CGMParams
from vgpp_pricing.domain.ept.ept_realization import EPTRealization
from vgpp_pricing.domain.ept.matrix_utils import (
    shift_exponential_column,
    shift_matrix,
    shift_resolvent_column,
    toeplitz_product_column,
)
from vgpp_pricing.domain.errors import DomainError, NumericalError

_logger = logging.getLogger("vg_ept")

# above this order the matrix formula is replaced by the incomplete-gamma form of the same sums
MATRIX_ORDER_LIMIT = 64


def cgm_from_vg(beta: float, sigma: float, theta: float) -> tuple[float, float]:
    """(G, M) solving G M = 2 beta / sigma^2 and M - G = -2 theta / sigma^2."""
    if not beta > 0 or not sigma > 0:
        raise DomainError("beta and sigma must be positive")
    root = math.sqrt(theta * theta + 2.0 * beta * sigma * sigma)
    sigma2 = sigma * sigma
    return (theta + root) / sigma2, (root - theta) / sigma2


def ept_log_coefficients(params: CGMParams) -> NDArray:
    """log c_s, s = 0..C-1, with c_s = (MG)^C / (C-1)! (2(C-1)-s)! (G+M)^(-2C+1+s) / (C-1-s)!."""
    C, G, M = params.C, params.G, params.M
    s = np.arange(C, dtype=float)
    return (
        C * math.log(M * G)
        - gammaln(C)
        + gammaln(2.0 * C - 1.0 - s)
        - (2.0 * C - 1.0 - s) * math.log(G + M)
        - gammaln(C - s)
    )


def vg_ept_realization(params: CGMParams) -> EPTRealization:
    """Realization with b = e_1, shared c, A_N = G I - a and A_P = -M I + a for the subdiagonal shift a."""
    order = params.C
    shift = shift_matrix(order)
    b = np.zeros(order)
    b[0] = 1.0
    c = np.exp(ept_log_coefficients(params))
    return EPTRealization(
        A_N=params.G * np.eye(order) - shift,
        b_N=b,
        c_N=c,
        A_P=-params.M * np.eye(order) + shift,
        b_P=b.copy(),
        c_P=c.copy(),
    )


def vg_ept_log_density(params: CGMParams, x: ArrayLike) -> float | NDArray:
    """Log-density from the exponential-polynomial coefficients, summed with logsumexp."""
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    log_c = ept_log_coefficients(params)
    s = np.arange(params.C, dtype=float)

    abs_x = np.abs(x_arr)
    # 0 * log 0 is taken as 0 so that only the s = 0 term survives at the origin
    with np.errstate(divide="ignore", invalid="ignore"):
        log_abs = np.log(abs_x)
        powers = np.where(s[None, :] == 0, 0.0, s[None, :] * log_abs[:, None])
    log_poly = logsumexp(log_c[None, :] + powers - gammaln(s + 1.0)[None, :], axis=1)

    exponent = np.where(x_arr <= 0, params.G * x_arr, -params.M * x_arr)
    value = exponent + log_poly
    return value if np.ndim(x) else float(value[0])


def vg_ept_density(params: CGMParams, x: ArrayLike) -> float | NDArray:
    return np.exp(vg_ept_log_density(params, x))


def vg_bessel_density(params: CGMParams, x: ArrayLike) -> float | NDArray:
    """Modified-Bessel form of the same density.

    (GM)^C / (Gamma(C) sqrt(pi)) e^{(G-M)x/2} (|x| / (G+M))^(C-1/2) K_{C-1/2}((G+M)|x| / 2)
    """
    C, G, M = params.C, params.G, params.M
    nu = C - 0.5
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    abs_x = np.abs(x_arr)
    values = np.empty_like(x_arr)

    origin = abs_x == 0
    if np.any(origin):
        # |x|^nu K_nu(b|x|) -> Gamma(nu) 2^(nu-1) b^-nu as x -> 0
        values[origin] = math.exp(
            C * math.log(G * M) + gammaln(nu) + (2.0 * nu - 1.0) * math.log(2.0)
            - gammaln(C) - 0.5 * math.log(math.pi) - 2.0 * nu * math.log(G + M)
        )

    rest = ~origin
    if np.any(rest):
        z = 0.5 * (G + M) * abs_x[rest]
        log_value = (
            C * math.log(G * M)
            - gammaln(C)
            - 0.5 * math.log(math.pi)
            + 0.5 * (G - M) * x_arr[rest]
            + nu * (np.log(abs_x[rest]) - math.log(G + M))
            + np.log(kve(nu, z))
            - z
        )
        values[rest] = np.exp(log_value)

    return values if np.ndim(x) else float(values[0])


def vg_omega(params: CGMParams, T: float = 1.0) -> float:
    """Per-unit-time martingale correction C log((1 - 1/M)(1 + 1/G)) / T for a law of horizon T."""
    if not params.M > 1:
        raise DomainError(f"omega exists only for M > 1, got M = {params.M}")
    if not T > 0:
        raise DomainError(f"T must be positive, got {T}")
    return params.C * math.log((1.0 - 1.0 / params.M) * (1.0 + 1.0 / params.G)) / T


def _log_moneyness(F0: float, K: float, r: float, T: float, omega: float) -> float:
    if not F0 > 0 or not K > 0 or not T > 0:
        raise DomainError("F0, K and T must be positive")
    return math.log(F0 / K) + (r + omega) * T


def _check_call_inputs(params: CGMParams) -> None:
    if not params.M > 1:
        raise DomainError(f"the call price needs E[e^X] finite, i.e. M > 1, got M = {params.M}")


def _resolvent_term(c: NDArray, scalar: float, step: float, d: float | None = None) -> float:
    """c B^-1 e^{-B d} b for B = scalar I + step a and b = e_1, from first columns of lower Toeplitz matrices."""
    order = c.size
    column = shift_resolvent_column(scalar, step, order)
    if d is not None:
        column = toeplitz_product_column(column, shift_exponential_column(-scalar * d, -step * d, order))
    return float(c @ column)


def vg_ept_call(params: CGMParams, F0: float, K: float, r: float, T: float, omega: float) -> float:
    """e^{-rT} E[(F0 e^{(r + omega)T + X} - K)^+] from the matrix realization; no integrals appear.

    With d = log(F0 / K) + (r + omega) T:
      d <= 0: -F0 e^{wT} c (A_P+I)^-1 e^{-(A_P+I)d} b + K e^{-rT} c A_P^-1 e^{-A_P d} b
      d > 0:  F0 e^{wT} [c (A_N+I)^-1 b - c (A_N+I)^-1 e^{-(A_N+I)d} b - c (A_P+I)^-1 b]
              - K e^{-rT} (1 - c A_N^-1 e^{-A_N d} b)

    Each A is a scalar times I plus or minus the subdiagonal shift, so every term is a dot product of c
    with the first column of a lower triangular Toeplitz matrix.
    """
    _check_call_inputs(params)
    d = _log_moneyness(F0, K, r, T, omega)
    if params.C > MATRIX_ORDER_LIMIT:
        _logger.debug(
            f"Order {params.C} above {MATRIX_ORDER_LIMIT}, pricing through incomplete gamma sums",
            extra={"vgpp_order": params.C},
        )
        return vg_ept_call_incomplete_gamma(params, F0, K, r, T, omega)

    c = np.exp(ept_log_coefficients(params))
    G, M = params.G, params.M
    forward_leg = F0 * math.exp(omega * T)
    strike_leg = K * math.exp(-r * T)

    if d <= 0:
        price = -forward_leg * _resolvent_term(c, 1.0 - M, 1.0, d) + strike_leg * _resolvent_term(c, -M, 1.0, d)
    else:
        price = forward_leg * (
            _resolvent_term(c, G + 1.0, -1.0)
            - _resolvent_term(c, G + 1.0, -1.0, d)
            - _resolvent_term(c, 1.0 - M, 1.0)
        ) - strike_leg * (1.0 - _resolvent_term(c, G, -1.0, d))

    if not math.isfinite(price):
        raise NumericalError(f"non-finite VG call price for C={params.C}, d={d}")
    return max(price, 0.0)


def vg_ept_call_incomplete_gamma(params: CGMParams, F0: float, K: float, r: float, T: float, omega: float) -> float:
    """The same call price with each polynomial-times-exponential integral as a regularized incomplete gamma.

    Stable for large C, where the matrix entries overflow.
    """
    _check_call_inputs(params)
    d = _log_moneyness(F0, K, r, T, omega)
    log_c = ept_log_coefficients(params)
    order = np.arange(1, params.C + 1, dtype=float)

    def positive_side(rate: float) -> float:
        # int_{max(-d, 0)}^inf x^s e^{-rate x} / s! dx
        lower = max(-d, 0.0)
        return float(np.sum(np.exp(log_c - order * math.log(rate)) * gammaincc(order, rate * lower)))

    def negative_side(rate: float) -> float:
        # int_{-d}^0 |x|^s e^{rate x} / s! dx, empty unless d > 0
        if d <= 0:
            return 0.0
        return float(np.sum(np.exp(log_c - order * math.log(rate)) * gammainc(order, rate * d)))

    exercised_growth = positive_side(params.M - 1.0) + negative_side(params.G + 1.0)
    exercised_mass = positive_side(params.M) + negative_side(params.G)

    price = F0 * math.exp(omega * T) * exercised_growth - K * math.exp(-r * T) * exercised_mass
    if not math.isfinite(price):
        raise NumericalError(f"non-finite VG call price for C={params.C}, d={d}")
    return max(price, 0.0)
