from vgpp_pricing.domain.gammapp import SamplePath
from vgpp_pricing.domain.vgpp.decomposed_betas import DecomposedBetas
from vgpp_pricing.domain.vgpp.sample_moments import SampleMoments, sample_moments
from vgpp_pricing.domain.vgpp.slice_ledger import SliceLedger
from vgpp_pricing.domain.vgpp.vgpp_laws import (
    compound_rates,
    factorized_chf,
    mixture_component_cgm,
    prob_zero_increment,
    vgpp_chf,
    vgpp_cumulants,
    vgpp_decompose,
    vgpp_density,
    vgpp_kurtosis,
    vgpp_law,
    vgpp_levy_density,
    vgpp_moments,
    vgpp_pdf_continuous,
    vgpp_skewness,
)
from vgpp_pricing.domain.vgpp.vgpp_params import VGPPParams
from vgpp_pricing.domain.vgpp.vgpp_sampling import (
    backward_process_slices,
    subordinated_normal,
    vgpp_path_backward,
    vgpp_path_forward,
    vgpp_sample,
    vgpp_sample_compound,
)

__all__ = [
    "VGPPParams",
    "DecomposedBetas",
    "SamplePath",
    "SampleMoments",
    "SliceLedger",
    "sample_moments",
    "vgpp_chf",
    "factorized_chf",
    "vgpp_decompose",
    "compound_rates",
    "vgpp_levy_density",
    "vgpp_cumulants",
    "vgpp_skewness",
    "vgpp_kurtosis",
    "vgpp_moments",
    "mixture_component_cgm",
    "vgpp_pdf_continuous",
    "vgpp_law",
    "vgpp_density",
    "prob_zero_increment",
    "subordinated_normal",
    "vgpp_sample",
    "vgpp_sample_compound",
    "vgpp_path_forward",
    "vgpp_path_backward",
    "backward_process_slices",
]
