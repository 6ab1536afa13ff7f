from vgpp_pricing.application.behaviors.exception_handling import global_exception_handler
from vgpp_pricing.application.behaviors.otel import initialize_opentelemetry

__all__ = ["initialize_opentelemetry", "global_exception_handler"]
