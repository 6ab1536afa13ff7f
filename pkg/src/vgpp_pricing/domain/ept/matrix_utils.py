import numpy as np
from numpy.typing import NDArray
from scipy.linalg import expm, toeplitz
from scipy.special import gammaln

from vgpp_pricing.domain.errors import NumericalError


def shift_matrix(order: int) -> NDArray:
    """Square matrix with ones on the first subdiagonal."""
    return np.eye(order, k=-1)


def _scalar_plus_nilpotent(matrix: NDArray) -> tuple[float, NDArray] | None:
    diagonal = np.diag(matrix)
    if not np.all(diagonal == diagonal[0]) or np.any(np.triu(matrix, k=1)):
        return None
    return float(diagonal[0]), np.tril(matrix, k=-1)


def shift_exponential_column(scalar: float, step: float, order: int) -> NDArray:
    """First column of exp(scalar I + step a) for the subdiagonal shift a: e^scalar step^k / k!."""
    k = np.arange(order, dtype=float)
    if step == 0:
        column = (k == 0).astype(float)
    else:
        column = np.sign(step) ** k * np.exp(k * np.log(abs(step)) - gammaln(k + 1.0))
    return np.exp(scalar) * column


def shift_resolvent_column(scalar: float, step: float, order: int) -> NDArray:
    """First column of (scalar I + step a)^-1 for the subdiagonal shift a: (-step)^k / scalar^(k+1)."""
    if scalar == 0:
        raise NumericalError("scalar I + step a is singular when scalar = 0")
    return np.power(-step / scalar, np.arange(order, dtype=float)) / scalar


def toeplitz_product_column(first: NDArray, second: NDArray) -> NDArray:
    """First column of the product of two lower triangular Toeplitz matrices given by their first columns."""
    return np.convolve(first, second)[: first.size]


def mat_exp(matrix: NDArray) -> NDArray:
    """Matrix exponential.

    lambda I + N with N strictly lower triangular gives e^lambda times the finite series of N, a lower
    Toeplitz matrix when N is a multiple of the subdiagonal shift; anything else goes through ``scipy.linalg.expm``.
    """
    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise NumericalError(f"mat_exp needs a square matrix, got shape {matrix.shape}")

    split = _scalar_plus_nilpotent(matrix)
    if split is None:
        return expm(matrix)

    scalar, nilpotent = split
    order = matrix.shape[0]
    if order > 1:
        step = nilpotent[1, 0]
        if np.array_equal(nilpotent, step * shift_matrix(order)):
            return toeplitz(shift_exponential_column(scalar, step, order), np.zeros(order))

    result = np.eye(order)
    term = np.eye(order)
    for k in range(1, order):
        term = term @ nilpotent / k
        if not np.any(term):
            break
        result = result + term
    return np.exp(scalar) * result


def mat_inv(matrix: NDArray) -> NDArray:
    """Inverse of a square matrix; a singular matrix or a non-finite inverse raises NumericalError."""
    matrix = np.asarray(matrix, dtype=float)
    try:
        inverse = np.linalg.inv(matrix)
    except np.linalg.LinAlgError as e:
        raise NumericalError(f"matrix is singular: {e}") from e

    if not np.all(np.isfinite(inverse)):
        raise NumericalError("matrix inverse is not finite")
    return inverse
