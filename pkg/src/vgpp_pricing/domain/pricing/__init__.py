from vgpp_pricing.domain.pricing.closed_pricer import (
    DEFAULT_SERIES_CUTOFF,
    ClosedFormPrice,
    price_call_closed,
    price_call_closed_detail,
    price_put_closed,
)
from vgpp_pricing.domain.pricing.fft_config import FFTConfig
from vgpp_pricing.domain.pricing.fft_pricer import price_call_fft, price_put_fft
from vgpp_pricing.domain.pricing.market_model import MarketModel
from vgpp_pricing.domain.pricing.mc_pricer import (
    DEFAULT_CHUNK_SIZE,
    MIN_PATHS,
    MCPrice,
    estimate,
    price_call_mc,
    price_calls_mc,
    price_put_mc,
    terminal_forwards,
)
from vgpp_pricing.domain.pricing.omega import vgpp_omega

__all__ = [
    "MarketModel",
    "FFTConfig",
    "ClosedFormPrice",
    "MCPrice",
    "DEFAULT_SERIES_CUTOFF",
    "DEFAULT_CHUNK_SIZE",
    "MIN_PATHS",
    "vgpp_omega",
    "price_call_closed",
    "price_call_closed_detail",
    "price_put_closed",
    "price_call_fft",
    "price_put_fft",
    "price_call_mc",
    "price_calls_mc",
    "price_put_mc",
    "terminal_forwards",
    "estimate",
]
