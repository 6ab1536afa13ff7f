from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from vgpp_pricing.domain.errors import DomainError


def validate_grid(grid: ArrayLike) -> NDArray:
    """Return ``grid`` as a float array, requiring grid[0] = 0 and strictly increasing times."""
    times = np.asarray(grid, dtype=float)
    if times.ndim != 1 or times.size == 0:
        raise DomainError("grid must be a non-empty one-dimensional time vector")
    if times[0] != 0.0:
        raise DomainError(f"grid must start at 0, got {times[0]}")
    if np.any(np.diff(times) <= 0):
        raise DomainError("grid must be strictly increasing")
    return times


@dataclass(frozen=True)
class SamplePath:
    """A batch of simulated trajectories on a common grid.

    ``z_values`` and ``x_values`` have shape (n_paths, len(grid)). ``x_values`` is None for a
    pure subordinator path.

    Attributes:
        grid (NDArray): Increasing time vector starting at 0.
        z_values (NDArray): Subordinator values per path and grid time.
        x_values (NDArray | None): Process values per path and grid time.
        seed_info (tuple[int, int]): (seed, stream_id) the batch was drawn from.
    """

    grid: NDArray
    z_values: NDArray
    x_values: NDArray | None
    seed_info: tuple[int, int]

    def __post_init__(self):
        if self.z_values.ndim != 2 or self.z_values.shape[1] != self.grid.size:
            raise DomainError("z_values must have shape (n_paths, len(grid))")
        if self.x_values is not None and self.x_values.shape != self.z_values.shape:
            raise DomainError("x_values must have the same shape as z_values")

    @property
    def n_paths(self) -> int:
        return self.z_values.shape[0]

    @property
    def terminal_z(self) -> NDArray:
        return self.z_values[:, -1]

    @property
    def terminal_x(self) -> NDArray:
        if self.x_values is None:
            raise DomainError("path batch carries no process values")
        return self.x_values[:, -1]

    def path(self, index: int) -> "SamplePath":
        """Single trajectory ``index`` as a one-path batch."""
        if not 0 <= index < self.n_paths:
            raise IndexError(f"path index {index} outside [0, {self.n_paths})")
        return SamplePath(
            grid=self.grid,
            z_values=self.z_values[index : index + 1],
            x_values=None if self.x_values is None else self.x_values[index : index + 1],
            seed_info=self.seed_info,
        )
