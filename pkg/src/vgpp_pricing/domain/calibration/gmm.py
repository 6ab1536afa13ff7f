import logging
from enum import Enum

import numpy as np

from vgpp_pricing.domain.calibration.calib_result import CalibrationMethod, CalibResult
from vgpp_pricing.domain.calibration.calibration_bounds import CalibrationBounds, from_vector, to_vector
from vgpp_pricing.domain.calibration.diagnostics import fit_diagnostics
from vgpp_pricing.domain.calibration.multistart import lbfgsb_multistart
from vgpp_pricing.domain.calibration.return_series import ReturnSeries
from vgpp_pricing.domain.errors import DomainError
from vgpp_pricing.domain.vgpp import VGPPParams, prob_zero_increment, sample_moments, vgpp_moments

_logger = logging.getLogger("gmm")

MIN_OBSERVATIONS = 100


class MomentWeighting(Enum):
    RELATIVE = "relative"
    EQUAL = "equal"


def gmm_objective(
    params: VGPPParams,
    dt: float,
    targets: tuple[float, float, float, float],
    weighting: MomentWeighting = MomentWeighting.RELATIVE,
) -> float:
    """Squared distance between (mean, variance, skewness, kurtosis) of X(dt) and ``targets``."""
    theoretical = np.array(vgpp_moments(params, dt))
    target = np.asarray(targets, dtype=float)
    gap = theoretical - target
    if weighting is MomentWeighting.RELATIVE:
        gap = gap / np.maximum(np.abs(target), 1e-12)
    return float(np.sum(gap * gap))


def gmm_fit(
    series: ReturnSeries,
    init: VGPPParams,
    bounds: CalibrationBounds | None = None,
    weighting: MomentWeighting = MomentWeighting.RELATIVE,
    n_starts: int = 5,
    workers: int = 1,
    seed: int = 0,
) -> CalibResult:
    """Moment matching on the four sample moments of the increments; exactly identified."""
    if series.log_prices.size < MIN_OBSERVATIONS:
        raise DomainError(f"GMM needs at least {MIN_OBSERVATIONS} observations, got {series.log_prices.size}")
    bounds = bounds or CalibrationBounds()
    init_vector = to_vector(init)
    if not bounds.contains(init_vector):
        raise DomainError("initial parameters lie outside the calibration bounds")

    targets = sample_moments(series.increments).as_tuple()

    def distance(vector) -> float:
        return gmm_objective(from_vector(vector), series.dt, targets, weighting)

    best, n_evals = lbfgsb_multistart(distance, init_vector, bounds, n_starts, workers, seed)
    params = from_vector(best.vector)

    _logger.info(
        f"GMM ({weighting.value}) finished after {n_evals} evaluations",
        extra={"vgpp_method": "gmm", "vgpp_evals": n_evals, "vgpp_weighting": weighting.value},
    )
    return CalibResult(
        method=CalibrationMethod.GMM,
        params=params,
        objective=best.value,
        converged=best.converged,
        n_evals=n_evals,
        p_zero=prob_zero_increment(params, series.dt),
        diagnostics=fit_diagnostics(best.vector, bounds, best.converged),
    )
