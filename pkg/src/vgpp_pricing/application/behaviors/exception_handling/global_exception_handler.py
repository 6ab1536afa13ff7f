import logging
import sys

from vgpp_pricing.domain.errors import ConfigurationError, DomainError, NumericalError


def _error_kind(exc_type) -> str:
    if issubclass(exc_type, ConfigurationError):
        return "configuration"
    if issubclass(exc_type, DomainError):
        return "domain"
    if issubclass(exc_type, NumericalError):
        return "numerical"
    return "unexpected"


def global_exception_handler(exc_type, exc_value, tb):
    """
    Process-wide hook for exceptions that escape the command dispatch in main.
    Library errors are logged with their kind; anything else keeps its traceback.
    """

    if issubclass(exc_type, KeyboardInterrupt):
        sys.__excepthook__(exc_type, exc_value, tb)
        return

    logger = logging.getLogger("global_exception_handler")
    kind = _error_kind(exc_type)

    if kind == "unexpected":
        logger.exception("An unhandled exception occurred", exc_info=(exc_type, exc_value, tb))
    else:
        logger.error(f"Run aborted by a {kind} error: {exc_value}", extra={"vgpp_error_kind": kind})

    sys.__excepthook__(exc_type, exc_value, tb)
