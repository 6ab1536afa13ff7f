from dataclasses import dataclass
from enum import Enum

from vgpp_pricing.domain.errors import DomainError


class SimulationDirection(Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


@dataclass(frozen=True)
class LSMCConfig:
    """Least-squares Monte Carlo settings.

    Attributes:
        n_paths (int): Simulated paths, at least 10^4.
        n_steps (int): Equispaced exercise dates after time zero, at least 4.
        basis_degree (int): Degree of the polynomial regression basis in F, in [2, 5].
        direction (SimulationDirection): Forward keeps the full path matrix; backward generates the
            paths from maturity towards zero and keeps two time slices.
    """

    n_paths: int = 100_000
    n_steps: int = 50
    basis_degree: int = 3
    direction: SimulationDirection = SimulationDirection.FORWARD

    def __post_init__(self):
        if self.n_paths < 10_000:
            raise DomainError(f"n_paths must be at least 10^4, got {self.n_paths}")
        if self.n_steps < 4:
            raise DomainError(f"n_steps must be at least 4, got {self.n_steps}")
        if not 2 <= self.basis_degree <= 5:
            raise DomainError(f"basis_degree must lie in [2, 5], got {self.basis_degree}")
