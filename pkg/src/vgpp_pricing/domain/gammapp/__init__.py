from vgpp_pricing.domain.gammapp.atomic_density import AtomicDensity, DensityPoint
from vgpp_pricing.domain.gammapp.gammapp_laws import (
    DEFAULT_DENSITY_TOLERANCE,
    gpp_chf,
    gpp_cumulants,
    gpp_density,
    gpp_law,
    gpp_levy_triplet,
    gpp_pdf_continuous,
)
from vgpp_pricing.domain.gammapp.gammapp_params import GammaPPParams
from vgpp_pricing.domain.gammapp.gammapp_sampling import (
    backward_slices,
    gpp_bridge,
    gpp_path_backward,
    gpp_path_forward,
    gpp_sample_cp,
    gpp_sample_polya,
    gpp_sample_polya_with_counts,
)
from vgpp_pricing.domain.gammapp.levy_triplet import LevyTriplet
from vgpp_pricing.domain.gammapp.polya_mixture import polya_mixture
from vgpp_pricing.domain.gammapp.sample_path import SamplePath, validate_grid

__all__ = [
    "GammaPPParams",
    "LevyTriplet",
    "AtomicDensity",
    "DensityPoint",
    "SamplePath",
    "validate_grid",
    "DEFAULT_DENSITY_TOLERANCE",
    "polya_mixture",
    "gpp_chf",
    "gpp_pdf_continuous",
    "gpp_law",
    "gpp_density",
    "gpp_levy_triplet",
    "gpp_cumulants",
    "gpp_sample_cp",
    "gpp_sample_polya",
    "gpp_sample_polya_with_counts",
    "gpp_bridge",
    "gpp_path_forward",
    "gpp_path_backward",
    "backward_slices",
]
