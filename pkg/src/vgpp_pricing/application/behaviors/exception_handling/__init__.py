from vgpp_pricing.application.behaviors.exception_handling.global_exception_handler import global_exception_handler

__all__ = ["global_exception_handler"]
