from vgpp_pricing.domain.config.otel_options import OTelOptions, clear_otel_options_cache, get_otel_options
from vgpp_pricing.domain.config.run_config import (
    CalibrateSettings,
    Command,
    ExoticSettings,
    MultisimSettings,
    PriceSettings,
    RunConfig,
    SimulateSettings,
    TriangleSettings,
)
from vgpp_pricing.domain.config.vgpp_options import VgppOptions, clear_vgpp_options_cache, get_vgpp_options

__all__ = [
    "OTelOptions",
    "get_otel_options",
    "clear_otel_options_cache",
    "VgppOptions",
    "get_vgpp_options",
    "clear_vgpp_options_cache",
    "Command",
    "RunConfig",
    "SimulateSettings",
    "PriceSettings",
    "TriangleSettings",
    "CalibrateSettings",
    "ExoticSettings",
    "MultisimSettings",
]
