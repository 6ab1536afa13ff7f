from collections.abc import Callable
from dataclasses import dataclass
from typing import NamedTuple

from numpy.typing import ArrayLike, NDArray


class DensityPoint(NamedTuple):
    """A law with an atom at zero evaluated at x: atom mass plus continuous density value(s)."""

    atom_weight: float
    continuous: float | NDArray


@dataclass(frozen=True)
class AtomicDensity:
    """Law with an atom at zero plus an absolutely continuous part.

    ``atom_weight + integral(continuous_part)`` equals one.
    """

    atom_weight: float
    continuous_part: Callable[[ArrayLike], float | NDArray]

    def __call__(self, x: ArrayLike) -> DensityPoint:
        return DensityPoint(self.atom_weight, self.continuous_part(x))
