import atexit
import logging
import os
import socket
from importlib.metadata import PackageNotFoundError, version

from cezzis_otel import OTelSettings, initialize_otel, shutdown_otel

from vgpp_pricing.domain.config import get_otel_options


def _package_version() -> str:
    try:
        return version("vgpp_pricing")
    except PackageNotFoundError:
        return "0.0.0"


def initialize_opentelemetry() -> None:
    """Initialize OpenTelemetry logging and tracing for a CLI run.

    Without an OTLP endpoint only console logging is configured.
    """

    # Make sure to shutdown and gracefully flush the telemetry data on exit
    atexit.register(shutdown_otel)

    # Suppress urllib3 debug logs (used by OTLP exporter) to prevent self-logging
    logging.getLogger("urllib3").setLevel(logging.INFO)
    logging.getLogger("urllib3.connectionpool").setLevel(logging.WARNING)

    otel_options = get_otel_options()

    initialize_otel(
        settings=OTelSettings(
            service_name=otel_options.otel_service_name,
            service_namespace=otel_options.otel_service_namespace,
            otlp_exporter_endpoint=otel_options.otel_exporter_otlp_endpoint,
            otlp_exporter_auth_header=otel_options.otel_otlp_exporter_auth_header,
            service_version=_package_version(),
            environment=os.environ.get("ENV", "unknown"),
            instance_id=socket.gethostname(),
            enable_logging=otel_options.exporting and otel_options.enable_logging,
            enable_tracing=otel_options.exporting and otel_options.enable_tracing,
            enable_console_logging=otel_options.enable_console_logging,
        ),
        resource_attributes={
            "app_name": otel_options.otel_service_name,
            "app_class": "cli",
            "app_product": "vgpp-pricing",
            "app_env": os.environ.get("ENV", "unknown"),
        },
        configure_tracing=lambda _: None,
    )

    logger = logging.getLogger("initialize_otel")
    target = otel_options.otel_exporter_otlp_endpoint if otel_options.exporting else "console only"
    logger.info(f"OpenTelemetry initialized ({target})")
