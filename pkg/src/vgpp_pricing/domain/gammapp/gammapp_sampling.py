"""Simulation of the Gamma++ subordinator.

Samplers draw ``size`` independent values (scalar when ``size`` is None). Path functions return a
``SamplePath`` batch of ``n_paths`` trajectories.
"""

import logging
from collections.abc import Iterator

import numpy as np
from numpy.typing import ArrayLike, NDArray

from vgpp_pricing.domain.distributions import (
    RngStream,
    beta_binomial_sample,
    beta_sample,
    exp_sample,
    gamma_sample,
    poisson_sample,
    polya_sample,
    uniform_sample,
)
from vgpp_pricing.domain.distributions.base_samplers import Size
from vgpp_pricing.domain.errors import DomainError
from vgpp_pricing.domain.gammapp.gammapp_params import GammaPPParams
from vgpp_pricing.domain.gammapp.sample_path import SamplePath, validate_grid

_logger = logging.getLogger("gammapp_sampling")


def _as_output(values: NDArray, size: Size) -> float | NDArray:
    return float(values[0]) if size is None else values


def gpp_sample_cp(params: GammaPPParams, t: float, rng: RngStream, size: Size = None) -> float | NDArray:
    """Compound-Poisson draw: Poisson(alpha t log(1/a)) jumps, each Exp(beta a^-U) with U uniform.

    Jump rates beta a^-U range over [beta, beta / a].
    """
    if not t > 0:
        raise DomainError(f"t must be positive, got {t}")
    n_draws = 1 if size is None else int(np.prod(size))

    counts = np.asarray(poisson_sample(params.jump_intensity * t, rng, n_draws))
    n_jumps = int(counts.sum())
    totals = np.zeros(n_draws)
    if n_jumps:
        u = uniform_sample(rng, n_jumps)
        jumps = exp_sample(params.beta * np.power(params.a, -u), rng)
        owner = np.repeat(np.arange(n_draws), counts)
        totals = np.bincount(owner, weights=jumps, minlength=n_draws)

    return _as_output(totals.reshape(size) if size is not None else totals, size)


def _erlang_given_counts(params: GammaPPParams, counts: NDArray, rng: RngStream) -> NDArray:
    values = np.zeros(counts.shape)
    jumped = counts > 0
    if np.any(jumped):
        values[jumped] = gamma_sample(counts[jumped], params.erlang_rate, rng)
    return values


def gpp_sample_polya_with_counts(
    params: GammaPPParams, t: float, rng: RngStream, n_draws: int
) -> tuple[NDArray, NDArray]:
    """Polya-mixture draws returning (values, Polya counters)."""
    if not t > 0:
        raise DomainError(f"t must be positive, got {t}")
    counts = np.asarray(polya_sample(params.counter(t), rng, n_draws))
    return _erlang_given_counts(params, counts, rng), counts


def gpp_sample_polya(params: GammaPPParams, t: float, rng: RngStream, size: Size = None) -> float | NDArray:
    """s ~ Polya(alpha t, 1 - a); 0 when s = 0, otherwise Gamma(s, beta / a)."""
    n_draws = 1 if size is None else int(np.prod(size))
    values, _ = gpp_sample_polya_with_counts(params, t, rng, n_draws)
    return _as_output(values.reshape(size) if size is not None else values, size)


def gpp_bridge(
    params: GammaPPParams,
    t: float,
    T: float,
    z_T: ArrayLike,
    s_T: ArrayLike,
    rng: RngStream,
) -> tuple[NDArray, NDArray]:
    """Bridge (Z, S) from (0, 0) to (z_T, s_T) at T, returning (z_t, s_t) at the interior time t.

    s_t ~ BetaBinomial(alpha t, alpha (T - t), s_T); z_t = z_T * Beta(s_t, s_T - s_t), with the
    degenerate ratios 0 when s_t = 0 and 1 when s_t = s_T. Vectorized over (z_T, s_T).
    """
    if not 0 < t < T:
        raise DomainError(f"bridge time must lie in (0, {T}), got {t}")
    z_end = np.atleast_1d(np.asarray(z_T, dtype=float))
    s_end = np.atleast_1d(np.asarray(s_T, dtype=np.int64))
    if np.any(z_end < 0) or np.any(s_end < 0):
        raise DomainError("bridge endpoints must be non-negative")
    if np.any((z_end == 0) != (s_end == 0)):
        raise DomainError("z_T must be zero exactly when s_T is zero")

    s_mid = np.asarray(
        beta_binomial_sample(params.alpha * t, params.alpha * (T - t), s_end, rng, s_end.shape), dtype=np.int64
    )

    ratio = np.where(s_mid == s_end, 1.0, 0.0)
    interior = (s_mid > 0) & (s_mid < s_end)
    if np.any(interior):
        ratio[interior] = beta_sample(s_mid[interior], s_end[interior] - s_mid[interior], rng)
    ratio[s_mid == 0] = 0.0

    return z_end * ratio, s_mid


def gpp_path_forward(params: GammaPPParams, grid: ArrayLike, rng: RngStream, n_paths: int = 1) -> SamplePath:
    """Cumulated independent Polya-mixture increments with shape alpha * dt on every grid interval."""
    times = validate_grid(grid)
    if n_paths < 1:
        raise DomainError("n_paths must be at least 1")

    increments = np.zeros((n_paths, times.size))
    for i, dt in enumerate(np.diff(times), start=1):
        increments[:, i], _ = gpp_sample_polya_with_counts(params, dt, rng, n_paths)

    return SamplePath(grid=times, z_values=np.cumsum(increments, axis=1), x_values=None, seed_info=rng.seed_info)


def backward_slices(
    params: GammaPPParams, grid: ArrayLike, rng: RngStream, n_paths: int = 1
) -> Iterator[tuple[int, NDArray]]:
    """Yield (grid index, Z slice) in decreasing time order, from the terminal time down to zero.

    Only the current slice and its right neighbour are alive at any time; each interior point is
    bridged between zero at time 0 and the already simulated point to its right.
    """
    times = validate_grid(grid)
    if n_paths < 1:
        raise DomainError("n_paths must be at least 1")

    last = times.size - 1
    if last == 0:
        yield 0, np.zeros(n_paths)
        return

    z_right, s_right = gpp_sample_polya_with_counts(params, times[-1], rng, n_paths)
    yield last, z_right

    for i in range(last - 1, 0, -1):
        z_right, s_right = gpp_bridge(params, times[i], times[i + 1], z_right, s_right, rng)
        yield i, z_right

    yield 0, np.zeros(n_paths)


def gpp_path_backward(params: GammaPPParams, grid: ArrayLike, rng: RngStream, n_paths: int = 1) -> SamplePath:
    """Terminal draw (s_T, z_T), then interior points filled by repeated Polya bridging."""
    times = validate_grid(grid)
    z_values = np.zeros((n_paths, times.size))
    for i, z_slice in backward_slices(params, times, rng, n_paths):
        z_values[:, i] = z_slice

    _logger.debug(
        f"Backward Gamma++ batch of {n_paths} paths on {times.size} grid points",
        extra={"vgpp_paths": n_paths, "vgpp_grid_points": times.size},
    )
    return SamplePath(grid=times, z_values=z_values, x_values=None, seed_info=rng.seed_info)
