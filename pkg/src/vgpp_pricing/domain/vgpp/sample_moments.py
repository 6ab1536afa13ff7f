from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from vgpp_pricing.domain.errors import DomainError


@dataclass(frozen=True)
class SampleMoments:
    """Mean, variance, skewness and (non-excess) kurtosis with delta-method standard errors."""

    mean: float
    variance: float
    skewness: float
    kurtosis: float
    mean_se: float
    variance_se: float
    skewness_se: float
    kurtosis_se: float
    n: int

    def as_tuple(self) -> tuple[float, float, float, float]:
        return self.mean, self.variance, self.skewness, self.kurtosis

    def standard_errors(self) -> tuple[float, float, float, float]:
        return self.mean_se, self.variance_se, self.skewness_se, self.kurtosis_se


def sample_moments(values: ArrayLike) -> SampleMoments:
    """Empirical moments of ``values``; standard errors come from the influence function of each statistic."""
    x = np.asarray(values, dtype=float).ravel()
    n = x.size
    if n < 4:
        raise DomainError("at least four observations are needed for sample moments")

    mean = float(x.mean())
    d = x - mean
    m2 = float(np.mean(d**2))
    if m2 == 0:
        raise DomainError("sample variance is zero")
    m3 = float(np.mean(d**3))
    m4 = float(np.mean(d**4))
    skewness = m3 / m2**1.5
    kurtosis = m4 / m2**2

    influence = (
        d,
        d**2 - m2,
        (d**3 - m3 - 3.0 * m2 * d) / m2**1.5 - 1.5 * skewness * (d**2 - m2) / m2,
        (d**4 - m4 - 4.0 * m3 * d) / m2**2 - 2.0 * kurtosis * (d**2 - m2) / m2,
    )
    se = [float(np.std(f, ddof=1) / np.sqrt(n)) for f in influence]

    return SampleMoments(
        mean=mean,
        variance=m2,
        skewness=skewness,
        kurtosis=kurtosis,
        mean_se=se[0],
        variance_se=se[1],
        skewness_se=se[2],
        kurtosis_se=se[3],
        n=n,
    )
