from vgpp_pricing.application.concerns.exotics.commands import ExoticCommand, ExoticCommandHandler

__all__ = ["ExoticCommand", "ExoticCommandHandler"]
