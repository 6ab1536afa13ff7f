import logging
import math
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray
from scipy.optimize import minimize

from vgpp_pricing.domain.calibration.calibration_bounds import CalibrationBounds
from vgpp_pricing.domain.distributions import RngStream, normal_sample

_logger = logging.getLogger("multistart")

# objective value standing in for regions where the model is undefined
PENALTY = 1e10


@dataclass(frozen=True)
class StartOutcome:
    index: int
    vector: NDArray
    value: float
    converged: bool
    n_evals: int
    message: str


def to_internal(vector: NDArray) -> NDArray:
    """(theta, sigma, a, alpha) -> (theta, log sigma, a, log alpha)."""
    theta, sigma, a, alpha = vector
    return np.array([theta, math.log(sigma), a, math.log(alpha)])


def from_internal(internal: NDArray) -> NDArray:
    theta, log_sigma, a, log_alpha = internal
    return np.array([theta, math.exp(log_sigma), a, math.exp(log_alpha)])


def internal_bounds(bounds: CalibrationBounds) -> tuple[NDArray, NDArray]:
    return to_internal(bounds.lower), to_internal(bounds.upper)


def start_points(init: NDArray, bounds: CalibrationBounds, n_starts: int, seed: int = 0) -> list[NDArray]:
    """``init`` followed by deterministic perturbations of it, all inside the bounds."""
    if n_starts < 1:
        raise ValueError("n_starts must be at least 1")
    root = RngStream(seed)
    inner_low = bounds.lower + 1e-6 * (bounds.upper - bounds.lower)
    inner_high = bounds.upper - 1e-6 * (bounds.upper - bounds.lower)
    starts = [np.clip(init, inner_low, inner_high)]

    for k in range(1, n_starts):
        z = np.asarray(normal_sample(0.0, 1.0, root.substream(k), 4))
        theta, sigma, a, alpha = init
        logit = math.log(a / (1.0 - a)) + 0.5 * z[2]
        candidate = np.array(
            [
                theta + z[0] * (0.5 * abs(theta) + 0.05),
                sigma * math.exp(0.3 * z[1]),
                1.0 / (1.0 + math.exp(-logit)),
                alpha * math.exp(0.5 * z[3]),
            ]
        )
        starts.append(np.clip(candidate, inner_low, inner_high))
    return starts


def run_starts(
    solve: Callable[[int, NDArray], StartOutcome], starts: list[NDArray], workers: int = 1
) -> list[StartOutcome]:
    """Run ``solve(index, start)`` for every start; the output order is the start order."""
    indices = list(range(len(starts)))
    if workers <= 1 or len(starts) == 1:
        return [solve(i, s) for i, s in zip(indices, starts)]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(solve, indices, starts))


def best_outcome(outcomes: list[StartOutcome]) -> StartOutcome:
    """Lowest objective, ties broken by start index."""
    for outcome in outcomes:
        if not outcome.converged:
            _logger.warning(
                f"Calibration start {outcome.index} did not converge: {outcome.message}",
                extra={"vgpp_start": outcome.index},
            )
    return min(outcomes, key=lambda o: (o.value if np.isfinite(o.value) else math.inf, o.index))


def lbfgsb_multistart(
    objective: Callable[[NDArray], float],
    init: NDArray,
    bounds: CalibrationBounds,
    n_starts: int,
    workers: int = 1,
    seed: int = 0,
) -> tuple[StartOutcome, int]:
    """Bounded quasi-Newton search from every start on the (theta, log sigma, a, log alpha) scale.

    ``objective`` takes a natural-scale vector and is minimized; non-finite values become PENALTY.
    Each start stops on a relative objective change below 1e-8 or after 10^4 evaluations.
    """
    low, high = internal_bounds(bounds)

    def internal_objective(internal: NDArray) -> float:
        try:
            value = objective(from_internal(internal))
        except (ValueError, ArithmeticError):
            return PENALTY
        return value if np.isfinite(value) else PENALTY

    def solve(index: int, start: NDArray) -> StartOutcome:
        result = minimize(
            internal_objective,
            to_internal(start),
            method="L-BFGS-B",
            bounds=list(zip(low, high)),
            options={"ftol": 1e-8, "maxfun": 10_000},
        )
        return StartOutcome(
            index=index,
            vector=from_internal(result.x),
            value=float(result.fun),
            converged=bool(result.success) and float(result.fun) < PENALTY,
            n_evals=int(result.nfev),
            message=str(result.message),
        )

    outcomes = run_starts(solve, start_points(init, bounds, n_starts, seed), workers)
    return best_outcome(outcomes), sum(o.n_evals for o in outcomes)
