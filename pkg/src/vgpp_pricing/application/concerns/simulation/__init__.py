from vgpp_pricing.application.concerns.simulation.commands import (
    MultiSimulateCommand,
    MultiSimulateCommandHandler,
    SimulateCommand,
    SimulateCommandHandler,
)

__all__ = ["SimulateCommand", "SimulateCommandHandler", "MultiSimulateCommand", "MultiSimulateCommandHandler"]
