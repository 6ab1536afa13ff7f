from vgpp_pricing.application.concerns.pricing.commands import (
    PriceCommand,
    PriceCommandHandler,
    TriangleCommand,
    TriangleCommandHandler,
)

__all__ = ["PriceCommand", "PriceCommandHandler", "TriangleCommand", "TriangleCommandHandler"]
