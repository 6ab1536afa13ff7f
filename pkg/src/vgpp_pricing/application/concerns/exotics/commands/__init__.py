from vgpp_pricing.application.concerns.exotics.commands.exotic_command import ExoticCommand, ExoticCommandHandler

__all__ = ["ExoticCommand", "ExoticCommandHandler"]
