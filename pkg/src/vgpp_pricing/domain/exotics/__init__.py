from vgpp_pricing.domain.exotics.lookback import price_lookback_call_max, price_lookback_ladder
from vgpp_pricing.domain.exotics.lsmc import price_american_put_lsmc
from vgpp_pricing.domain.exotics.lsmc_config import LSMCConfig, SimulationDirection
from vgpp_pricing.domain.exotics.vg_baseline import price_european_vg_mc, vg_path_forward, vg_sample
from vgpp_pricing.domain.exotics.vg_params import VGParams, moment_matched_vg, vg_market_omega

__all__ = [
    "LSMCConfig",
    "SimulationDirection",
    "VGParams",
    "moment_matched_vg",
    "vg_market_omega",
    "vg_sample",
    "vg_path_forward",
    "price_european_vg_mc",
    "price_american_put_lsmc",
    "price_lookback_call_max",
    "price_lookback_ladder",
]
