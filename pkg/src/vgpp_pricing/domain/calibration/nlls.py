import logging
import math
from enum import Enum

import numpy as np
from numpy.typing import NDArray
from scipy.optimize import least_squares

from vgpp_pricing.domain.calibration.calib_result import CalibrationMethod, CalibResult
from vgpp_pricing.domain.calibration.calibration_bounds import CalibrationBounds, from_vector, to_vector
from vgpp_pricing.domain.calibration.diagnostics import fit_diagnostics
from vgpp_pricing.domain.calibration.multistart import (
    StartOutcome,
    best_outcome,
    from_internal,
    internal_bounds,
    run_starts,
    start_points,
    to_internal,
)
from vgpp_pricing.domain.calibration.quote_set import QuoteSet
from vgpp_pricing.domain.errors import DomainError
from vgpp_pricing.domain.pricing import FFTConfig, price_call_closed, price_call_fft
from vgpp_pricing.domain.vgpp import VGPPParams, prob_zero_increment

_logger = logging.getLogger("nlls")

# per-quote residual where a price cannot be computed (omega undefined and the like)
PENALTY_RESIDUAL = 1e5
# tight enough that series truncation does not make the objective jump between evaluations
CALIBRATION_CUTOFF = 1e-10
N_FREE_PARAMETERS = 4


class PricerKind(Enum):
    CLOSED = "closed"
    FFT = "fft"


def quote_prices(
    params: VGPPParams,
    quotes: QuoteSet,
    pricer: PricerKind = PricerKind.CLOSED,
    fft_cfg: FFTConfig | None = None,
    cutoff: float = CALIBRATION_CUTOFF,
) -> NDArray:
    """Model call prices in quote order."""
    prices = np.empty(len(quotes.quotes))
    if pricer is PricerKind.CLOSED:
        for i, quote in enumerate(quotes.quotes):
            prices[i] = price_call_closed(params, quotes.market, quote.K, quote.T, cutoff, matrix_form=False)
        return prices

    for T in quotes.maturities:
        positions = [i for i, q in enumerate(quotes.quotes) if q.T == T]
        strikes = [quotes.quotes[i].K for i in positions]
        prices[positions] = price_call_fft(params, quotes.market, strikes, T, fft_cfg)
    return prices


def quote_residuals(
    params: VGPPParams,
    quotes: QuoteSet,
    pricer: PricerKind = PricerKind.CLOSED,
    fft_cfg: FFTConfig | None = None,
    cutoff: float = CALIBRATION_CUTOFF,
) -> NDArray:
    """Model minus market prices; a large finite residual vector where the model cannot price."""
    mids = np.array([q.mid for q in quotes.quotes])
    try:
        residuals = quote_prices(params, quotes, pricer, fft_cfg, cutoff) - mids
    except (ValueError, ArithmeticError):
        return np.full(mids.size, PENALTY_RESIDUAL)
    return residuals if np.all(np.isfinite(residuals)) else np.full(mids.size, PENALTY_RESIDUAL)


def nlls_objective(
    params: VGPPParams,
    quotes: QuoteSet,
    pricer: PricerKind = PricerKind.CLOSED,
    fft_cfg: FFTConfig | None = None,
    cutoff: float = CALIBRATION_CUTOFF,
) -> float:
    """Sum of squared price residuals."""
    residuals = quote_residuals(params, quotes, pricer, fft_cfg, cutoff)
    return float(residuals @ residuals)


def nlls_fit(
    quotes: QuoteSet,
    init: VGPPParams,
    bounds: CalibrationBounds | None = None,
    pricer: PricerKind = PricerKind.CLOSED,
    fft_cfg: FFTConfig | None = None,
    n_starts: int = 5,
    workers: int = 1,
    seed: int = 0,
    dt: float = 1.0 / 252.0,
) -> CalibResult:
    """Least squares on option prices over (theta, sigma, a, alpha) with beta = (1 - a) alpha.

    ``dt`` only sets the horizon of the reported zero-increment probability.
    """
    bounds = bounds or CalibrationBounds()
    init_vector = to_vector(init)
    if not bounds.contains(init_vector):
        raise DomainError("initial parameters lie outside the calibration bounds")
    low, high = internal_bounds(bounds)

    def residual_fn(internal: NDArray) -> NDArray:
        try:
            params = from_vector(from_internal(internal))
        except (ValueError, ArithmeticError):
            return np.full(len(quotes.quotes), PENALTY_RESIDUAL)
        return quote_residuals(params, quotes, pricer, fft_cfg)

    def solve(index: int, start: NDArray) -> StartOutcome:
        result = least_squares(
            residual_fn,
            to_internal(start),
            bounds=(low, high),
            method="trf",
            x_scale="jac",
            ftol=1e-12,
            xtol=1e-12,
            gtol=1e-12,
            max_nfev=10_000,
        )
        value = float(result.fun @ result.fun)
        return StartOutcome(
            index=index,
            vector=from_internal(result.x),
            value=value,
            converged=bool(result.success) and np.all(np.abs(result.fun) < PENALTY_RESIDUAL),
            n_evals=int(result.nfev),
            message=str(result.message),
        )

    outcomes = run_starts(solve, start_points(init_vector, bounds, n_starts, seed), workers)
    best = best_outcome(outcomes)
    n_evals = sum(o.n_evals for o in outcomes)
    params = from_vector(best.vector)
    residuals = quote_residuals(params, quotes, pricer, fft_cfg)

    extra_flags = []
    if len(quotes.quotes) < N_FREE_PARAMETERS:
        extra_flags.append("under-identified")

    rmse = math.sqrt(float(residuals @ residuals) / residuals.size)
    _logger.info(
        f"NLLS ({pricer.value}) finished after {n_evals} evaluations, price RMSE {rmse:.3e}",
        extra={"vgpp_method": "nlls", "vgpp_evals": n_evals, "vgpp_rmse": rmse},
    )
    return CalibResult(
        method=CalibrationMethod.NLLS,
        params=params,
        objective=float(residuals @ residuals),
        converged=bool(best.converged),
        n_evals=n_evals,
        p_zero=prob_zero_increment(params, dt),
        residuals=[float(r) for r in residuals],
        diagnostics=fit_diagnostics(best.vector, bounds, best.converged, extra_flags),
    )
