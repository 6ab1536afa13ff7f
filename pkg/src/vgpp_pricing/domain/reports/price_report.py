from dataclasses import dataclass, field
from enum import Enum

from vgpp_pricing.domain.pricing import MarketModel
from vgpp_pricing.domain.reports.report_codec import SCHEMA_VERSION
from vgpp_pricing.domain.vgpp import VGPPParams


class PriceMethod(Enum):
    CLOSED = "closed"
    FFT = "fft"
    MC = "mc"


@dataclass(frozen=True)
class PriceReport:
    """One European price. ``stderr`` is set for Monte Carlo, ``terms_used`` for the closed series."""

    method: PriceMethod
    params: VGPPParams
    market: MarketModel
    K: float
    T: float
    put: bool
    price: float
    omega: float
    stderr: float | None = None
    terms_used: int | None = None
    schema_version: int = SCHEMA_VERSION


@dataclass(frozen=True)
class TriangleCell:
    K: float
    T: float
    closed: float
    fft: float
    mc: float
    mc_stderr: float
    closed_fft_error: float
    closed_mc_error: float
    fft_mc_error: float


@dataclass(frozen=True)
class TriangleReport:
    """Closed, FFT and Monte Carlo call prices over a strike by maturity grid with pairwise errors."""

    params: VGPPParams
    market: MarketModel
    seed: int
    mc_paths: int
    cells: list[TriangleCell] = field(default_factory=list)
    max_closed_fft_error: float = 0.0
    max_closed_mc_stderrs: float = 0.0
    csv_file: str | None = None
    schema_version: int = SCHEMA_VERSION
