from vgpp_pricing.application.behaviors.otel.initialize_otel import initialize_opentelemetry

__all__ = ["initialize_opentelemetry"]
