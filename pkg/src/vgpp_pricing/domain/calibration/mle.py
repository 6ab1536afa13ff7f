import logging

from vgpp_pricing.domain.calibration.calib_result import CalibrationMethod, CalibResult
from vgpp_pricing.domain.calibration.calibration_bounds import CalibrationBounds, from_vector, to_vector
from vgpp_pricing.domain.calibration.diagnostics import fit_diagnostics
from vgpp_pricing.domain.calibration.likelihood import DEFAULT_ATOM_EPS, log_likelihood
from vgpp_pricing.domain.calibration.multistart import lbfgsb_multistart
from vgpp_pricing.domain.calibration.return_series import ReturnSeries
from vgpp_pricing.domain.errors import DomainError
from vgpp_pricing.domain.vgpp import VGPPParams, prob_zero_increment

_logger = logging.getLogger("mle")


def mle_fit(
    series: ReturnSeries,
    init: VGPPParams,
    bounds: CalibrationBounds | None = None,
    atom_eps: float = DEFAULT_ATOM_EPS,
    n_starts: int = 5,
    workers: int = 1,
    seed: int = 0,
) -> CalibResult:
    """Maximum likelihood over (theta, sigma, a, alpha) with beta = (1 - a) alpha, best of several starts."""
    bounds = bounds or CalibrationBounds()
    init_vector = to_vector(init)
    if not bounds.contains(init_vector):
        raise DomainError("initial parameters lie outside the calibration bounds")
    n_obs = series.increments.size

    def negative_mean_loglik(vector) -> float:
        return -log_likelihood(from_vector(vector), series, atom_eps) / n_obs

    best, n_evals = lbfgsb_multistart(negative_mean_loglik, init_vector, bounds, n_starts, workers, seed)
    params = from_vector(best.vector)

    _logger.info(
        f"MLE finished after {n_evals} evaluations, best start {best.index}",
        extra={"vgpp_method": "mle", "vgpp_evals": n_evals, "vgpp_start": best.index},
    )
    return CalibResult(
        method=CalibrationMethod.MLE,
        params=params,
        objective=-best.value * n_obs,
        converged=best.converged,
        n_evals=n_evals,
        p_zero=prob_zero_increment(params, series.dt),
        diagnostics=fit_diagnostics(best.vector, bounds, best.converged),
    )
