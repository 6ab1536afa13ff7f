import math

import numpy as np

from vgpp_pricing.domain.calibration.return_series import ReturnSeries
from vgpp_pricing.domain.errors import DomainError, NumericalError
from vgpp_pricing.domain.vgpp import VGPPParams, vgpp_pdf_continuous

# only exact zeros are read as the atom unless a wider band is asked for
DEFAULT_ATOM_EPS = 1e-10


def log_likelihood(params: VGPPParams, series: ReturnSeries, atom_eps: float = DEFAULT_ATOM_EPS) -> float:
    """Censored-mixture log-likelihood of the series increments.

    Increments with |dX| <= atom_eps contribute log a^(alpha dt); the others contribute the log of the
    continuous part of the transition density. Never raises for a valid series: an undefined or
    non-finite density yields -inf.
    """
    if atom_eps < 0:
        raise DomainError(f"atom_eps must be non-negative, got {atom_eps}")

    steps = series.increments
    in_atom = np.abs(steps) <= atom_eps
    total = float(np.count_nonzero(in_atom)) * params.alpha * series.dt * math.log(params.a)

    continuous = steps[~in_atom]
    if continuous.size:
        try:
            density = np.asarray(vgpp_pdf_continuous(params, series.dt, continuous))
        except (DomainError, NumericalError, FloatingPointError):
            return -math.inf
        with np.errstate(divide="ignore", invalid="ignore"):
            log_density = np.log(density)
        if not np.all(np.isfinite(log_density)):
            return -math.inf
        total += float(log_density.sum())

    return total if math.isfinite(total) else -math.inf
