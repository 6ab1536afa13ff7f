from vgpp_pricing.domain.errors.configuration_error import ConfigurationError
from vgpp_pricing.domain.errors.domain_error import DomainError
from vgpp_pricing.domain.errors.numerical_error import NumericalError

__all__ = ["ConfigurationError", "DomainError", "NumericalError"]
