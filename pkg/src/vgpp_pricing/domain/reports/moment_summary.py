from dataclasses import dataclass

from vgpp_pricing.domain.vgpp import SampleMoments


@dataclass(frozen=True)
class MomentSummary:
    """Mean, variance, skewness and kurtosis, with standard errors when estimated from a sample."""

    mean: float
    variance: float
    skewness: float
    kurtosis: float
    mean_se: float | None = None
    variance_se: float | None = None
    skewness_se: float | None = None
    kurtosis_se: float | None = None
    n: int | None = None

    @classmethod
    def from_sample(cls, sample: SampleMoments) -> "MomentSummary":
        return cls(
            mean=sample.mean,
            variance=sample.variance,
            skewness=sample.skewness,
            kurtosis=sample.kurtosis,
            mean_se=sample.mean_se,
            variance_se=sample.variance_se,
            skewness_se=sample.skewness_se,
            kurtosis_se=sample.kurtosis_se,
            n=sample.n,
        )

    @classmethod
    def from_theory(cls, moments: tuple[float, float, float, float]) -> "MomentSummary":
        mean, variance, skewness, kurtosis = moments
        return cls(mean=mean, variance=variance, skewness=skewness, kurtosis=kurtosis)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return self.mean, self.variance, self.skewness, self.kurtosis

    def within(self, other: "MomentSummary", n_se: float = 3.0) -> bool:
        """Whether every statistic of ``other`` lies within ``n_se`` of this sample's standard errors."""
        errors = (self.mean_se, self.variance_se, self.skewness_se, self.kurtosis_se)
        if any(se is None for se in errors):
            raise ValueError("within() needs a sample summary with standard errors")
        return all(
            abs(mine - theirs) <= n_se * se for mine, theirs, se in zip(self.as_tuple(), other.as_tuple(), errors)
        )
