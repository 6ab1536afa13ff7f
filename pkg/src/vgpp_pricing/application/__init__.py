from vgpp_pricing.application.behaviors import global_exception_handler, initialize_opentelemetry
from vgpp_pricing.application.concerns import (
    CalibrateCommand,
    CalibrateCommandHandler,
    ExoticCommand,
    ExoticCommandHandler,
    MultiSimulateCommand,
    MultiSimulateCommandHandler,
    PriceCommand,
    PriceCommandHandler,
    SimulateCommand,
    SimulateCommandHandler,
    TriangleCommand,
    TriangleCommandHandler,
)

__all__ = [
    "initialize_opentelemetry",
    "global_exception_handler",
    "SimulateCommand",
    "SimulateCommandHandler",
    "MultiSimulateCommand",
    "MultiSimulateCommandHandler",
    "PriceCommand",
    "PriceCommandHandler",
    "TriangleCommand",
    "TriangleCommandHandler",
    "CalibrateCommand",
    "CalibrateCommandHandler",
    "ExoticCommand",
    "ExoticCommandHandler",
]
