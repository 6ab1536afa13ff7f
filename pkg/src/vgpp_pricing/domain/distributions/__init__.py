from vgpp_pricing.domain.distributions.base_samplers import (
    beta_sample,
    binomial_sample,
    exp_sample,
    gamma_sample,
    normal_sample,
    poisson_sample,
    uniform_sample,
)
from vgpp_pricing.domain.distributions.beta_binomial import beta_binomial_logpmf, beta_binomial_sample
from vgpp_pricing.domain.distributions.partition import chunk_sizes, partitioned_map
from vgpp_pricing.domain.distributions.polya import polya_logpmf, polya_pmf, polya_sample
from vgpp_pricing.domain.distributions.polya_params import PolyaParams
from vgpp_pricing.domain.distributions.rng_stream import RngStream

__all__ = [
    "RngStream",
    "PolyaParams",
    "polya_pmf",
    "polya_logpmf",
    "polya_sample",
    "beta_binomial_logpmf",
    "beta_binomial_sample",
    "gamma_sample",
    "beta_sample",
    "exp_sample",
    "poisson_sample",
    "normal_sample",
    "binomial_sample",
    "uniform_sample",
    "chunk_sizes",
    "partitioned_map",
]
