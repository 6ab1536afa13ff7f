from dataclasses import dataclass, field
from enum import Enum

from vgpp_pricing.domain.exotics import LSMCConfig, VGParams
from vgpp_pricing.domain.pricing import MarketModel
from vgpp_pricing.domain.reports.report_codec import SCHEMA_VERSION
from vgpp_pricing.domain.vgpp import VGPPParams


class ContractKind(Enum):
    AMERICAN_PUT = "american_put"
    LOOKBACK_CALL_MAX = "lookback_call_max"


@dataclass(frozen=True)
class ExoticPoint:
    """Price at one starting forward; ``european`` is the closed-form European price, when computed."""

    F0: float
    price: float
    stderr: float
    intrinsic: float
    european: float | None = None


@dataclass(frozen=True)
class LadderPoint:
    """Lookback prices under VG++ and under its moment-matched VG for one monitoring frequency."""

    n_steps: int
    vgpp_price: float
    vgpp_stderr: float
    vg_price: float
    vg_stderr: float


@dataclass(frozen=True)
class ExoticReport:
    contract: ContractKind
    params: VGPPParams
    market: MarketModel
    K: float
    T: float
    config: LSMCConfig
    seed: int
    price: float
    stderr: float
    sweep: list[ExoticPoint] = field(default_factory=list)
    vg_params: VGParams | None = None
    ladder: list[LadderPoint] = field(default_factory=list)
    csv_file: str | None = None
    schema_version: int = SCHEMA_VERSION
