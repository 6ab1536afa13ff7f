from dataclasses import dataclass, field
from enum import Enum

from vgpp_pricing.domain.calibration import TRADING_DAY, CalibrationMethod, MomentWeighting, PricerKind
from vgpp_pricing.domain.errors import ConfigurationError
from vgpp_pricing.domain.exotics import SimulationDirection
from vgpp_pricing.domain.multivariate import AssetLoading, BrownianLayer
from vgpp_pricing.domain.pricing import MarketModel
from vgpp_pricing.domain.reports import ContractKind, PriceMethod, ProcessKind
from vgpp_pricing.domain.vgpp import VGPPParams


class Command(Enum):
    SIMULATE = "simulate"
    PRICE = "price"
    CALIBRATE = "calibrate"
    EXOTIC = "exotic"
    MULTISIM = "multisim"
    TRIANGLE = "triangle"


@dataclass
class SimulateSettings:
    process: ProcessKind = ProcessKind.VGPP
    direction: SimulationDirection = SimulationDirection.FORWARD
    paths: int = 10_000
    horizon: float = 1.0
    steps: int = 1
    save_paths: int = 1


@dataclass
class PriceSettings:
    method: PriceMethod = PriceMethod.CLOSED
    K: float = 100.0
    T: float = 1.0
    put: bool = False
    paths: int = 100_000


@dataclass
class TriangleSettings:
    strikes: list[float] = field(default_factory=lambda: [80.0, 90.0, 100.0, 110.0, 120.0])
    maturities: list[float] = field(default_factory=lambda: [0.25, 0.5, 1.0])
    mc_paths: int = 1_000_000


@dataclass
class CalibrateSettings:
    """Inputs of a calibration run; ``init`` defaults to the run's ``params``."""

    method: CalibrationMethod | None = None
    returns_file: str | None = None
    quotes_file: str | None = None
    pricer: PricerKind = PricerKind.CLOSED
    weighting: MomentWeighting = MomentWeighting.RELATIVE
    dt: float = TRADING_DAY
    init: VGPPParams | None = None


@dataclass
class ExoticSettings:
    """Contract terms and simulation settings; ``step_ladder`` adds the VG vs VG++ lookback comparison."""

    contract: ContractKind = ContractKind.AMERICAN_PUT
    K: float = 56.0
    T: float = 0.26
    paths: int = 100_000
    steps: int = 50
    basis_degree: int = 3
    direction: SimulationDirection = SimulationDirection.FORWARD
    sweep: list[float] = field(default_factory=list)
    step_ladder: list[int] = field(default_factory=list)
    european: bool = True


@dataclass
class MultisimSettings:
    a: float = 0.5
    alpha_common: float = 5.0
    beta: float = 5.0
    assets: list[AssetLoading] = field(default_factory=list)
    layers: list[BrownianLayer] = field(default_factory=list)
    paths: int = 10_000
    horizon: float = 1.0
    steps: int = 12


@dataclass
class RunConfig:
    """One CLI run: the command, its inputs and the seed that makes it reproducible.

    Attributes:
        command (Command): Command to run.
        output (str): Report path; companion CSV files are written next to it.
        seed (int | None): Root seed. Required by every stochastic command.
        params (VGPPParams | None): Model parameters.
        market (MarketModel | None): Forward and rate for pricing commands.
    """

    command: Command = Command.SIMULATE
    output: str = "vgpp_report.json"
    seed: int | None = None
    params: VGPPParams | None = None
    market: MarketModel | None = None
    simulate: SimulateSettings = field(default_factory=SimulateSettings)
    price: PriceSettings = field(default_factory=PriceSettings)
    triangle: TriangleSettings = field(default_factory=TriangleSettings)
    calibrate: CalibrateSettings = field(default_factory=CalibrateSettings)
    exotic: ExoticSettings = field(default_factory=ExoticSettings)
    multisim: MultisimSettings = field(default_factory=MultisimSettings)

    @property
    def stochastic(self) -> bool:
        if self.command is Command.PRICE:
            return self.price.method is PriceMethod.MC
        return True

    def validate(self) -> "RunConfig":
        """Check the cross-field requirements of the selected command."""
        if self.stochastic and self.seed is None:
            raise ConfigurationError(f"a seed is required for '{self.command.value}'")
        if self.seed is not None and self.seed < 0:
            raise ConfigurationError("seed must be non-negative")
        if self.command is not Command.MULTISIM and self.params is None:
            raise ConfigurationError(f"'{self.command.value}' needs model params")
        if self.command in (Command.PRICE, Command.TRIANGLE, Command.EXOTIC) and self.market is None:
            raise ConfigurationError(f"'{self.command.value}' needs a market (F0, r)")

        if self.command is Command.SIMULATE:
            self._positive("paths", self.simulate.paths)
            self._positive("steps", self.simulate.steps)
        elif self.command is Command.PRICE and self.price.method is PriceMethod.MC:
            self._positive("paths", self.price.paths)
        elif self.command is Command.TRIANGLE:
            self._positive("mc_paths", self.triangle.mc_paths)
            if not self.triangle.strikes or not self.triangle.maturities:
                raise ConfigurationError("triangle needs at least one strike and one maturity")
        elif self.command is Command.CALIBRATE:
            self._check_calibration()
        elif self.command is Command.EXOTIC:
            self._positive("paths", self.exotic.paths)
            self._positive("steps", self.exotic.steps)
        elif self.command is Command.MULTISIM:
            self._positive("paths", self.multisim.paths)
            self._positive("steps", self.multisim.steps)
            if not self.multisim.assets:
                raise ConfigurationError("multisim needs at least one asset")
            if self.multisim.layers and len(self.multisim.layers) != len(self.multisim.assets):
                raise ConfigurationError("multisim needs one Brownian layer per asset, or none")
        return self

    def _check_calibration(self) -> None:
        settings = self.calibrate
        if settings.method is None:
            raise ConfigurationError("calibrate needs --method (mle, gmm or nlls)")
        if settings.method is CalibrationMethod.NLLS:
            if not settings.quotes_file:
                raise ConfigurationError("nlls calibration needs a quotes file")
            if self.market is None:
                raise ConfigurationError("nlls calibration needs a market (F0, r)")
        elif not settings.returns_file:
            raise ConfigurationError(f"{settings.method.value} calibration needs a returns file")

    @staticmethod
    def _positive(name: str, value: int) -> None:
        if value < 1:
            raise ConfigurationError(f"{name} must be at least 1, got {value}")
