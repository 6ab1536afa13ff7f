from vgpp_pricing.domain.ept.cgm_params import CGMParams
from vgpp_pricing.domain.ept.ept_realization import EPTRealization
from vgpp_pricing.domain.ept.matrix_utils import (
    mat_exp,
    mat_inv,
    shift_exponential_column,
    shift_matrix,
    shift_resolvent_column,
    toeplitz_product_column,
)
from vgpp_pricing.domain.ept.vg_ept import (
    MATRIX_ORDER_LIMIT,
    cgm_from_vg,
    ept_log_coefficients,
    vg_bessel_density,
    vg_ept_call,
    vg_ept_call_incomplete_gamma,
    vg_ept_density,
    vg_ept_log_density,
    vg_ept_realization,
    vg_omega,
)

__all__ = [
    "CGMParams",
    "EPTRealization",
    "MATRIX_ORDER_LIMIT",
    "mat_exp",
    "mat_inv",
    "shift_matrix",
    "shift_exponential_column",
    "shift_resolvent_column",
    "toeplitz_product_column",
    "cgm_from_vg",
    "ept_log_coefficients",
    "vg_ept_realization",
    "vg_ept_density",
    "vg_ept_log_density",
    "vg_bessel_density",
    "vg_ept_call",
    "vg_ept_call_incomplete_gamma",
    "vg_omega",
]
