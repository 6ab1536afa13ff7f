from dataclasses import dataclass


@dataclass(frozen=True)
class DecomposedBetas:
    """Rates of the split X = Z_p - Z_n into two independent Gamma++ processes.

    Z_p ~ Gamma++(a_p, alpha, beta_p) and Z_n ~ Gamma++(a_n, alpha, beta_n), where a_p = beta_p / tbeta_p
    and a_n = beta_n / tbeta_n. The tilde rates are also the exponential jump rates of the
    compound representation.
    """

    beta_p: float
    beta_n: float
    tbeta_p: float
    tbeta_n: float

    @property
    def a_p(self) -> float:
        return self.beta_p / self.tbeta_p

    @property
    def a_n(self) -> float:
        return self.beta_n / self.tbeta_n
