from collections.abc import Callable
from dataclasses import dataclass

from numpy.typing import ArrayLike, NDArray


@dataclass(frozen=True)
class LevyTriplet:
    """Characteristic triplet (drift, diffusion, Levy density) of a Levy process.

    ``levy_density`` is non-negative and, for a subordinator, supported on (0, inf).
    """

    drift: float
    diffusion: float
    levy_density: Callable[[ArrayLike], NDArray]
