from dataclasses import dataclass

from vgpp_pricing.domain.errors import DomainError


@dataclass(frozen=True)
class CGMParams:
    """Integer-shape Variance Gamma law in (C, G, M) form: X = Gamma(C, M) - Gamma(C, G).

    Attributes:
        C (int): Shape, at least 1.
        G (float): Decay rate of the negative side.
        M (float): Decay rate of the positive side; pricing needs M > 1.
    """

    C: int
    G: float
    M: float

    def __post_init__(self):
        if int(self.C) != self.C or self.C < 1:
            raise DomainError(f"C must be an integer >= 1, got {self.C}")
        if not self.G > 0:
            raise DomainError(f"G must be positive, got {self.G}")
        if not self.M > 0:
            raise DomainError(f"M must be positive, got {self.M}")
