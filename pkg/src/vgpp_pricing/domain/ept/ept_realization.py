from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from vgpp_pricing.domain.ept.matrix_utils import mat_exp


@dataclass(frozen=True)
class EPTRealization:
    """Matrix realization of a two-sided exponential-polynomial density.

    f(x) = c_N exp(A_N x) b_N for x <= 0 and c_P exp(A_P x) b_P for x > 0.
    """

    A_N: NDArray
    b_N: NDArray
    c_N: NDArray
    A_P: NDArray
    b_P: NDArray
    c_P: NDArray

    @property
    def order(self) -> int:
        return self.A_N.shape[0]

    def density(self, x: ArrayLike) -> float | NDArray:
        """Evaluate the density point by point through matrix exponentials."""
        x_arr = np.atleast_1d(np.asarray(x, dtype=float))
        values = np.empty_like(x_arr)
        for i, xi in enumerate(x_arr):
            if xi <= 0:
                values[i] = self.c_N @ mat_exp(self.A_N * xi) @ self.b_N
            else:
                values[i] = self.c_P @ mat_exp(self.A_P * xi) @ self.b_P
        return values if np.ndim(x) else float(values[0])
