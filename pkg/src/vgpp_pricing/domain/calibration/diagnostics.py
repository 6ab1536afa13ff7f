import logging

from numpy.typing import NDArray

from vgpp_pricing.domain.calibration.calibration_bounds import CalibrationBounds

_logger = logging.getLogger("calibration_diagnostics")


def fit_diagnostics(
    vector: NDArray, bounds: CalibrationBounds, converged: bool, extra_flags: list[str] | None = None
) -> list[str]:
    """Flags for parameters on a bound, a non-converged search and any caller-specific conditions."""
    diagnostics = [f"at-bound: {name}" for name in bounds.touching(vector)]
    if not converged:
        diagnostics.append("not converged")
    diagnostics.extend(extra_flags or [])
    for flag in diagnostics:
        _logger.warning(f"Calibration flag: {flag}", extra={"vgpp_flag": flag})
    return diagnostics
