from dataclasses import dataclass

from vgpp_pricing.domain.errors import DomainError


@dataclass(frozen=True)
class FFTConfig:
    """Carr-Madan grid settings.

    Attributes:
        damping (float): Exponential damping of the call price in log-strike.
        grid_size (int): Number of frequency points, a power of two.
        eta (float): Frequency spacing.
        separate_atom (bool): Price the zero-increment atom in closed form and invert only the
            continuous part of the law.
    """

    damping: float = 1.5
    grid_size: int = 2**14
    eta: float = 0.25
    separate_atom: bool = True

    def __post_init__(self):
        if not self.damping > 0:
            raise DomainError(f"damping must be positive, got {self.damping}")
        if self.grid_size < 2**10 or self.grid_size & (self.grid_size - 1):
            raise DomainError(f"grid_size must be a power of two >= 1024, got {self.grid_size}")
        if not self.eta > 0:
            raise DomainError(f"eta must be positive, got {self.eta}")
