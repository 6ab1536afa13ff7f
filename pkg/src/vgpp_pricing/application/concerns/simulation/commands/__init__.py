from vgpp_pricing.application.concerns.simulation.commands.multisim_command import (
    MultiSimulateCommand,
    MultiSimulateCommandHandler,
)
from vgpp_pricing.application.concerns.simulation.commands.simulate_command import (
    SimulateCommand,
    SimulateCommandHandler,
)

__all__ = ["SimulateCommand", "SimulateCommandHandler", "MultiSimulateCommand", "MultiSimulateCommandHandler"]
