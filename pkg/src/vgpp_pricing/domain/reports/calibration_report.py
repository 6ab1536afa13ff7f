import math
from dataclasses import dataclass, field

from vgpp_pricing.domain.calibration import CalibrationMethod, CalibResult
from vgpp_pricing.domain.reports.report_codec import SCHEMA_VERSION
from vgpp_pricing.domain.vgpp import VGPPParams


@dataclass(frozen=True)
class CalibrationReport:
    """Calibration outcome; ``p_zero`` is the liquidity probability over one observation step."""

    method: CalibrationMethod
    p_zero: float
    params: VGPPParams
    objective: float
    converged: bool
    n_evals: int
    n_observations: int
    seed: int
    rmse: float | None = None
    residuals: list[float] = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list)
    schema_version: int = SCHEMA_VERSION

    @classmethod
    def from_result(cls, result: CalibResult, n_observations: int, seed: int) -> "CalibrationReport":
        rmse = (
            math.sqrt(sum(r * r for r in result.residuals) / len(result.residuals)) if result.residuals else None
        )
        return cls(
            method=result.method,
            p_zero=result.p_zero,
            params=result.params,
            objective=result.objective,
            converged=result.converged,
            n_evals=result.n_evals,
            n_observations=n_observations,
            seed=seed,
            rmse=rmse,
            residuals=list(result.residuals),
            diagnostics=list(result.diagnostics),
        )
