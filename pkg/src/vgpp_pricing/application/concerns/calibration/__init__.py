from vgpp_pricing.application.concerns.calibration.commands import CalibrateCommand, CalibrateCommandHandler

__all__ = ["CalibrateCommand", "CalibrateCommandHandler"]
