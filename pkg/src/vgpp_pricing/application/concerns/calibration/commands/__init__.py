from vgpp_pricing.application.concerns.calibration.commands.calibrate_command import (
    CalibrateCommand,
    CalibrateCommandHandler,
)

__all__ = ["CalibrateCommand", "CalibrateCommandHandler"]
