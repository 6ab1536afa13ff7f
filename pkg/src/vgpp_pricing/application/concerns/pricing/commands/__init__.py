from vgpp_pricing.application.concerns.pricing.commands.price_command import PriceCommand, PriceCommandHandler
from vgpp_pricing.application.concerns.pricing.commands.triangle_command import (
    TriangleCommand,
    TriangleCommandHandler,
)

__all__ = ["PriceCommand", "PriceCommandHandler", "TriangleCommand", "TriangleCommandHandler"]
