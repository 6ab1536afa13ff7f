from dataclasses import dataclass, field
from enum import Enum

from vgpp_pricing.domain.vgpp import VGPPParams


class CalibrationMethod(Enum):
    MLE = "mle"
    GMM = "gmm"
    NLLS = "nlls"


@dataclass(frozen=True)
class CalibResult:
    """Outcome of a calibration run.

    Attributes:
        method (CalibrationMethod): Estimator used.
        params (VGPPParams): Best parameters, with beta = (1 - a) alpha.
        objective (float): Objective at ``params`` (log-likelihood for MLE, distance otherwise).
        converged (bool): Whether the selected start met the termination contract.
        n_evals (int): Objective evaluations summed over all starts.
        p_zero (float): Probability a^(alpha dt) of a zero increment over one observation step.
        residuals (list[float]): Per-quote price residuals (NLLS only).
        diagnostics (list[str]): Flags such as parameters at a bound or an under-identified fit.
    """

    method: CalibrationMethod
    params: VGPPParams
    objective: float
    converged: bool
    n_evals: int
    p_zero: float
    residuals: list[float] = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list)

    @property
    def under_identified(self) -> bool:
        return "under-identified" in self.diagnostics
