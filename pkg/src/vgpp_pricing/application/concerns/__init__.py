from vgpp_pricing.application.concerns.calibration import CalibrateCommand, CalibrateCommandHandler
from vgpp_pricing.application.concerns.exotics import ExoticCommand, ExoticCommandHandler
from vgpp_pricing.application.concerns.pricing import (
    PriceCommand,
    PriceCommandHandler,
    TriangleCommand,
    TriangleCommandHandler,
)
from vgpp_pricing.application.concerns.simulation import (
    MultiSimulateCommand,
    MultiSimulateCommandHandler,
    SimulateCommand,
    SimulateCommandHandler,
)

__all__ = [
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
