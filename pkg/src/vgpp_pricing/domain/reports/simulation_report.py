from dataclasses import dataclass, field

from vgpp_pricing.domain.exotics import SimulationDirection
from vgpp_pricing.domain.reports.moment_summary import MomentSummary
from vgpp_pricing.domain.reports.process_kind import ProcessKind
from vgpp_pricing.domain.reports.report_codec import SCHEMA_VERSION
from vgpp_pricing.domain.vgpp import VGPPParams


@dataclass(frozen=True)
class SimulationReport:
    """Moment summary of a simulated batch at its horizon.

    ``terminal`` summarizes Z(T) for a subordinator run and X(T) for a VG++ run; ``theory`` holds the
    closed-form counterpart. ``zero_increment_fraction`` is measured over every grid step of every path.
    """

    process: ProcessKind
    direction: SimulationDirection
    params: VGPPParams
    seed: int
    n_paths: int
    horizon: float
    n_steps: int
    terminal: MomentSummary
    theory: MomentSummary
    zero_increment_fraction: float
    atom_probability: float
    path_files: list[str] = field(default_factory=list)
    schema_version: int = SCHEMA_VERSION


@dataclass(frozen=True)
class MarginalSummary:
    asset: int
    mean: float
    variance: float
    theoretical_mean: float
    theoretical_variance: float
    zero_increment_fraction: float
    atom_probability: float


@dataclass(frozen=True)
class MultiSimulationReport:
    """Marginal and cross-asset statistics of a common-factor subordinator batch at its horizon."""

    seed: int
    n_paths: int
    horizon: float
    n_steps: int
    marginals: list[MarginalSummary]
    covariance: list[list[float]]
    theoretical_covariance: list[list[float]]
    path_file: str | None = None
    schema_version: int = SCHEMA_VERSION
