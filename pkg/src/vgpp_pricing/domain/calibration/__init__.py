from vgpp_pricing.domain.calibration.calib_result import CalibrationMethod, CalibResult
from vgpp_pricing.domain.calibration.calibration_bounds import CalibrationBounds, from_vector, to_vector
from vgpp_pricing.domain.calibration.gmm import MomentWeighting, gmm_fit, gmm_objective
from vgpp_pricing.domain.calibration.likelihood import DEFAULT_ATOM_EPS, log_likelihood
from vgpp_pricing.domain.calibration.mle import mle_fit
from vgpp_pricing.domain.calibration.multistart import PENALTY, start_points
from vgpp_pricing.domain.calibration.nlls import (
    CALIBRATION_CUTOFF,
    PricerKind,
    nlls_fit,
    nlls_objective,
    quote_prices,
    quote_residuals,
)
from vgpp_pricing.domain.calibration.quote_set import Quote, QuoteSet
from vgpp_pricing.domain.calibration.return_series import TRADING_DAY, ReturnSeries

__all__ = [
    "ReturnSeries",
    "Quote",
    "QuoteSet",
    "CalibResult",
    "CalibrationMethod",
    "CalibrationBounds",
    "MomentWeighting",
    "PricerKind",
    "TRADING_DAY",
    "DEFAULT_ATOM_EPS",
    "CALIBRATION_CUTOFF",
    "PENALTY",
    "to_vector",
    "from_vector",
    "start_points",
    "log_likelihood",
    "mle_fit",
    "gmm_objective",
    "gmm_fit",
    "quote_prices",
    "quote_residuals",
    "nlls_objective",
    "nlls_fit",
]
